#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_output_options(CLI::App* sub, guph::cli::RunConfig& config) {
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, guph::cli::OutputFormat>{
                {"csv", guph::cli::OutputFormat::csv},
                {"json", guph::cli::OutputFormat::json}},
            CLI::ignore_case))
        ->default_str("csv");
    sub->add_option("--out", config.output_path, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "s-wave hydrogen bound states in momentum space under a minimal-length "
        "deformed Heisenberg algebra (beta' = 2 beta)"};
    app.require_subcommand(1);

    guph::cli::RunConfig config;

    auto* spectrum = app.add_subcommand(
        "spectrum", "energy levels: exact closed form, series, and undeformed values");
    spectrum->add_option("--beta", config.beta, "deformation parameter, a.u.")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--n-max", config.n_max, "highest principal quantum number")
        ->check(CLI::PositiveNumber);
    add_output_options(spectrum, config);

    auto* wavefunction = app.add_subcommand(
        "wavefunction", "normalized momentum-space wavefunction samples");
    wavefunction->add_option("--beta", config.beta, "deformation parameter, a.u.")
        ->check(CLI::NonNegativeNumber);
    wavefunction->add_option("--n", config.n, "principal quantum number")
        ->check(CLI::PositiveNumber);
    wavefunction->add_option("--p-min", config.p_min, "grid start, a.u.");
    wavefunction->add_option("--p-max", config.p_max, "grid end, a.u.");
    wavefunction->add_option("--samples", config.samples, "number of grid points");
    add_output_options(wavefunction, config);

    auto* verify = app.add_subcommand(
        "verify", "run the numerical cross-validation suite and report pass/fail per check");
    verify->add_option("--beta", config.beta, "extra deformation added to the check matrix")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--negate-ode-coulomb", config.negate_ode_coulomb)->group("");
    add_output_options(verify, config);

    auto* bounds = app.add_subcommand(
        "bounds", "minimal-length upper bounds from 1S-2S accuracy and the Lamb shift");
    bounds->add_option("--epsilon", config.epsilon, "relative 1S-2S accuracy")
        ->check(CLI::NonNegativeNumber);
    bounds->add_option("--lamb-exp-mhz", config.lamb_exp_mhz, "measured 1S Lamb shift, MHz");
    bounds->add_option("--lamb-th-mhz", config.lamb_th_mhz, "computed 1S Lamb shift, MHz");
    add_output_options(bounds, config);

    CLI11_PARSE(app, argc, argv);

    if (spectrum->parsed()) config.command = guph::cli::Command::spectrum;
    if (wavefunction->parsed()) config.command = guph::cli::Command::wavefunction;
    if (verify->parsed()) config.command = guph::cli::Command::verify;
    if (bounds->parsed()) config.command = guph::cli::Command::bounds;

    try {
        return guph::cli::run(config);
    } catch (const guph::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return guph::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return guph::cli::kExitFailure;
    }
}
