#include <algorithm>
#include <cctype>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"
#include "sgbounds/numerics.hpp"

namespace {

bool looks_negative_value(const std::string& arg) {
    return arg.size() > 1 && arg[0] == '-' && (std::isdigit(static_cast<unsigned char>(arg[1])) || arg[1] == '.');
}

// "--alpha-db -10:20:31" would otherwise be read as a short flag; glue such
// values to their option as "--alpha-db=-10:20:31".
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (!out.empty() && looks_negative_value(arg) && out.back().rfind("--", 0) == 0 &&
            out.back().find('=') == std::string::npos) {
            out.back() += "=" + arg;
            continue;
        }
        out.push_back(std::move(arg));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace sgb::cli;
    CLI::App app{"Stochastic-geometry SINR simulator and analytical bounds", "sgb"};
    app.set_version_flag("--version", std::string("sgb 0.1.0 (") + SGB_GIT_REVISION + ")");
    const auto run = register_commands(app);

    std::vector<std::string> args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return run();
    } catch (const sgb::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << " (best estimate " << e.best_estimate() << ", error "
                  << e.error_estimate() << ")\n";
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
