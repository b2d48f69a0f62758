#include "sgbounds/channel.hpp"

#include <stdexcept>

namespace sgb {

std::string_view to_string(FadingModel m) {
    switch (m) {
        case FadingModel::NonFading: return "nfd";
        case FadingModel::Rayleigh: return "fd";
        case FadingModel::PartialFading: return "pfd";
    }
    return "?";
}

FadingModel parse_fading_model(std::string_view name) {
    if (name == "nfd") return FadingModel::NonFading;
    if (name == "fd") return FadingModel::Rayleigh;
    if (name == "pfd") return FadingModel::PartialFading;
    throw std::invalid_argument("unknown fading model '" + std::string(name) + "' (expected nfd, fd or pfd)");
}

void draw_powers(FadingModel model, std::vector<double>& out, RandomStream& rng) {
    if (out.empty()) throw std::invalid_argument("draw_powers: need at least one coefficient");
    switch (model) {
        case FadingModel::NonFading:
            for (auto& p : out) p = 1.0;
            break;
        case FadingModel::Rayleigh:
            for (auto& p : out) p = rng.exponential();
            break;
        case FadingModel::PartialFading:
            out[0] = 1.0;
            for (std::size_t k = 1; k < out.size(); ++k) out[k] = rng.exponential();
            break;
    }
}

std::vector<double> draw_powers(FadingModel model, std::size_t count, RandomStream& rng) {
    std::vector<double> out(count);
    draw_powers(model, out, rng);
    return out;
}

}  // namespace sgb
