#pragma once

#include "hcycle/heatzeta.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcycle {

using FourierTerms = std::vector<std::pair<int, cplx>>;

/// Parses "k:re[:im],k:re[:im],..." into terms c_k e^{2 pi i k x}.
FourierTerms parse_fourier_terms(std::string_view text);

struct FunctionParams {
    double hbar = 0.3;      ///< used by riesz-ramp
    FourierTerms fourier;   ///< used by custom-fourier
};

/// Names: one, cos, sin, one-plus-cos, riesz-ramp, arctan, custom-fourier.
RealLineFunction make_function(std::string_view name, const FunctionParams& params = {});

std::vector<std::string> function_names();

}  // namespace hcycle
