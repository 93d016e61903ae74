#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "guph/bounds.hpp"
#include "guph/spectrum.hpp"
#include "verify.hpp"

namespace guph::cli {

namespace {

using Rows = nlohmann::ordered_json;

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const Rows& v) {
    if (v.is_number_float()) return format_g17(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.get<std::string>();
}

void write_rows(const Rows& rows, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        out << rows.dump(2) << '\n';
        return;
    }
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        (void)value;
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            out << (first ? "" : ",") << csv_cell(value);
            first = false;
        }
        out << '\n';
    }
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
    if (config.n_max < 1) throw UsageError("--n-max must be >= 1");
    Rows rows = Rows::array();
    for (int n = 1; n <= config.n_max; ++n) {
        const double nn = n;
        Rows row;
        row["n"] = n;
        row["k_au"] = spectrum::solve_k_closed_form(n, config.beta);
        row["e_exact_au"] = spectrum::energy_exact(n, config.beta);
        row["e_series_au"] = spectrum::energy_series(n, config.beta);
        row["e_undeformed_au"] = spectrum::energy_undeformed(n);
        row["corr_sqrt_beta_au"] = std::sqrt(3.0 * config.beta) / (nn * nn * nn);
        row["corr_beta_au"] = -7.5 * config.beta / (nn * nn * nn * nn);
        rows.push_back(std::move(row));
    }
    write_rows(rows, config.format, out);
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& config, std::ostream& out) {
    if (!(config.p_min > 0.0)) throw UsageError("--p-min must be positive");
    if (!(config.p_min < config.p_max)) throw UsageError("--p-min must be below --p-max");
    if (config.samples < 2) throw UsageError("--samples must be >= 2");

    const auto state = spectrum::normalize(spectrum::make_bound_state(config.n, config.beta));
    const double step = (config.p_max - config.p_min) / (config.samples - 1);
    Rows rows = Rows::array();
    for (int i = 0; i < config.samples; ++i) {
        const double p = (i + 1 == config.samples) ? config.p_max : config.p_min + i * step;
        const auto sample = spectrum::sample_wavefunction(state, p);
        Rows row;
        row["p_au"] = sample.p;
        row["re_psi"] = sample.value.real();
        row["im_psi"] = sample.value.imag();
        row["density"] = sample.modulus_sq_weighted;
        rows.push_back(std::move(row));
    }
    write_rows(rows, config.format, out);
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    VerifyOptions options;
    options.beta = config.beta;
    options.negate_ode_coulomb = config.negate_ode_coulomb;
    const auto results = run_verification(options);

    Rows rows = Rows::array();
    int failures = 0;
    for (const auto& r : results) {
        Rows row;
        row["check_name"] = r.name;
        row["measured"] = r.measured;
        row["tolerance"] = r.tolerance;
        row["pass"] = r.pass;
        rows.push_back(std::move(row));
        if (!r.pass) ++failures;
    }
    write_rows(rows, config.format, out);
    return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_bounds(const RunConfig& config, std::ostream& out) {
    Rows rows = Rows::array();
    int status = kExitOk;

    const auto b1 = bounds::bound_from_1s2s(config.epsilon);
    Rows row1;
    row1["source"] = "1s2s_accuracy";
    row1["input"] = config.epsilon;
    row1["sqrt_3beta_au"] = b1.sqrt_3beta_au;
    row1["delta_x_min_fm"] = b1.delta_x_min_fm;
    row1["paper_quoted_fm"] = bounds::reported_bound_1s2s_fm;
    rows.push_back(std::move(row1));

    auto lamb_input = bounds::default_lamb_input();
    lamb_input.lamb_exp_mhz = config.lamb_exp_mhz;
    lamb_input.lamb_th_mhz = config.lamb_th_mhz;
    try {
        const auto b2 = bounds::bound_from_lamb(lamb_input);
        Rows row2;
        row2["source"] = "lamb_shift";
        row2["input"] = lamb_input.lamb_exp_mhz - lamb_input.lamb_th_mhz;
        row2["sqrt_3beta_au"] = b2.sqrt_3beta_au;
        row2["delta_x_min_fm"] = b2.delta_x_min_fm;
        row2["paper_quoted_fm"] = bounds::reported_bound_lamb_fm;
        rows.push_back(std::move(row2));
    } catch (const std::domain_error& e) {
        std::cerr << "lamb bound underivable: " << e.what() << '\n';
        status = kExitFailure;
    }

    write_rows(rows, config.format, out);
    return status;
}

int run(const RunConfig& config) {
    const auto dispatch = [&config](std::ostream& out) {
        switch (config.command) {
            case Command::spectrum: return cmd_spectrum(config, out);
            case Command::wavefunction: return cmd_wavefunction(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::bounds: return cmd_bounds(config, out);
        }
        return kExitUsage;
    };
    if (config.output_path) {
        std::ofstream file(*config.output_path);
        if (!file) throw UsageError("cannot open output file: " + *config.output_path);
        return dispatch(file);
    }
    return dispatch(std::cout);
}

}  // namespace guph::cli
