#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgbounds/rng.hpp"

namespace sgb {

enum class FadingModel {
    NonFading,      // every |h_k|^2 = 1
    Rayleigh,       // every |h_k|^2 ~ Exp(1)
    PartialFading,  // desired |h_1|^2 = 1, interferers ~ Exp(1)
};

std::string_view to_string(FadingModel m);

/// Parses the short CLI names "nfd", "fd", "pfd".
FadingModel parse_fading_model(std::string_view name);

/// Power coefficients for one realization; entry 0 is the desired link.
std::vector<double> draw_powers(FadingModel model, std::size_t count, RandomStream& rng);

/// In-place variant used by the Monte Carlo loop to avoid reallocation.
void draw_powers(FadingModel model, std::vector<double>& out, RandomStream& rng);

}  // namespace sgb
