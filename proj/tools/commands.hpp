#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace guph::cli {

enum class Command { spectrum, wavefunction, verify, bounds };
enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::spectrum;
    double beta = 0.0;
    int n = 1;
    int n_max = 10;
    double p_min = 0.05;
    double p_max = 20.0;
    int samples = 200;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> output_path;

    // bounds overrides; defaults are the published spectroscopy inputs
    double epsilon = 1.8e-14;
    double lamb_exp_mhz = 8172.837;
    double lamb_th_mhz = 8172.731;

    bool negate_ode_coulomb = false;  // verify fault injection, test only
};

// A config error that maps to the usage-error exit status.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_wavefunction(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_bounds(const RunConfig& config, std::ostream& out);

// Dispatches on config.command, honoring output_path.
int run(const RunConfig& config);

}  // namespace guph::cli
