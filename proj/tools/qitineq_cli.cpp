#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qitineq/campaign.hpp"
#include "qitineq/json_io.hpp"

namespace {

using namespace qitineq;

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

// Accepts either a block element {"shape":..., "blocks":...} or a bare
// matrix {"rows":..., ...} treated as a single-block element.
BlockDiagonalElement load_element(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    if (j.contains("shape")) return element_from_json(j);
    ComplexMatrix m = matrix_from_json(j);
    if (m.rows() != m.cols()) throw ParseError(path + ": matrix must be square");
    return {AlgebraShape{{m.rows()}}, {std::move(m)}};
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

CampaignConfig build_config(const std::string& checks_arg, std::size_t instances,
                            std::uint64_t seed, const std::string& shapes_arg,
                            const std::string& kinds_arg, const std::string& families_arg,
                            double tolerance) {
    CampaignConfig config;
    if (checks_arg == "all") {
        config.checks = all_check_ids();
    } else {
        config.checks = split_commas(checks_arg);
        for (const auto& id : config.checks)
            if (!is_known_check(id)) throw ParseError("unknown check id: " + id);
    }
    config.instances_per_check = instances;
    config.seed = seed;
    if (const char* env = std::getenv("QITINEQ_SEED")) {
        std::size_t pos = 0;
        config.seed = std::stoull(env, &pos);
        if (pos != std::string(env).size())
            throw ParseError("QITINEQ_SEED must be an integer");
    }
    if (!shapes_arg.empty()) config.shapes = parse_shapes(shapes_arg);
    if (!kinds_arg.empty()) {
        config.map_kinds.clear();
        for (const auto& name : split_commas(kinds_arg))
            config.map_kinds.push_back(map_kind_from_name(name));
    }
    if (!families_arg.empty()) {
        config.pair_families.clear();
        for (const auto& name : split_commas(families_arg))
            config.pair_families.push_back(pair_family_from_name(name));
    }
    config.tolerance = tolerance;
    config.validate();
    return config;
}

int cmd_verify(const std::string& checks_arg, std::size_t instances, std::uint64_t seed,
               const std::string& shapes_arg, const std::string& kinds_arg,
               const std::string& families_arg, double tolerance, const std::string& out,
               const std::string& format) {
    CampaignConfig config = build_config(checks_arg, instances, seed, shapes_arg,
                                         kinds_arg, families_arg, tolerance);
    CampaignResult result = run_campaign(config);

    std::string table = summary_table(result);
    std::cout << table;

    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw ParseError("cannot write file: " + out);
        if (format == "table")
            file << table;
        else
            file << campaign_to_json(config, result).dump(2) << '\n';
    }

    std::size_t violations = result.total_violations();
    if (violations > 0) {
        std::cout << "violations: " << violations << '\n';
        return 1;
    }
    return 0;
}

int cmd_eval(const std::string& measure, const std::string& rho_path,
             const std::string& a_path, const std::string& b_path,
             const std::string& f_spec, const std::string& g_spec,
             const std::string& map_arg) {
    BlockDiagonalElement rho = load_element(rho_path);
    BlockDiagonalElement a = load_element(a_path);
    FunctionPair pair{ScalarFunction::parse(f_spec), ScalarFunction::parse(g_spec)};

    TracialMap phi = map_arg.empty()
                         ? TracialMap::scalar_trace(rho.shape())
                         : map_from_json(load_json_file(map_arg));
    MeasureContext ctx(phi, rho, pair);

    BlockDiagonalElement value = [&] {
        if (measure == "var") return gen_variance(ctx, a);
        if (measure == "skew") return skew_information(ctx, a);
        BlockDiagonalElement b = load_element(b_path.empty() ? a_path : b_path);
        if (measure == "cov") return gen_covariance(ctx, a, b);
        if (measure == "corr") return gen_correlation(ctx, a, b);
        if (measure == "sym_corr") return sym_correlation(ctx, a, b);
        throw ParseError("unknown measure: " + measure +
                         " (expected cov|var|corr|skew|sym_corr)");
    }();

    std::cout << element_to_json(value).dump(2) << '\n';
    return 0;
}

// diag(p, 1-p) with the two standard anticommuting observables
struct QubitFixture {
    DensityElement rho;
    BlockDiagonalElement sx;
    BlockDiagonalElement sy;
};

QubitFixture qubit_fixture(double p) {
    AlgebraShape shape{{2}};
    TracialMap phi = TracialMap::scalar_trace(shape);
    ComplexMatrix r(2, 2), x(2, 2), y(2, 2);
    r(0, 0) = p;
    r(1, 1) = 1.0 - p;
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    y(0, 1) = cplx(0.0, -1.0);
    y(1, 0) = cplx(0.0, 1.0);
    return {DensityElement{BlockDiagonalElement(shape, {r}), phi},
            BlockDiagonalElement(shape, {x}), BlockDiagonalElement(shape, {y})};
}

double scalar_of(const BlockDiagonalElement& x) { return x.blocks()[0](0, 0).real(); }

int cmd_demo(const std::string& name) {
    std::cout << std::fixed << std::setprecision(6);
    if (name == "heisenberg" || name == "schrodinger") {
        std::cout << std::left << std::setw(8) << "p" << std::right << std::setw(14)
                  << "Var(A)Var(B)" << std::setw(14) << "bound" << std::setw(14)
                  << "margin" << '\n';
        for (int i = 1; i <= 19; ++i) {
            double p = 0.05 * i;
            QubitFixture q = qubit_fixture(p);
            MeasureContext ctx = classical_context(q.rho);
            double var_a = scalar_of(gen_variance(ctx, q.sx));
            double var_b = scalar_of(gen_variance(ctx, q.sy));
            double comm = std::abs(
                ctx.map().apply_effective(ctx.rho() * element_commutator(q.sx, q.sy))
                    .blocks()[0](0, 0));
            double product = var_a * var_b;
            double bound = comm * comm / 4.0;
            if (name == "schrodinger") {
                double re_cov = scalar_of(element_real_part(gen_covariance(ctx, q.sx, q.sy)));
                product -= re_cov * re_cov;
            }
            std::cout << std::left << std::setw(8) << p << std::right << std::setw(14)
                      << product << std::setw(14) << bound << std::setw(14)
                      << product - bound << '\n';
        }
        return 0;
    }
    if (name == "alpha_chain") {
        std::cout << std::left << std::setw(8) << "alpha" << std::right << std::setw(14)
                  << "I^alpha" << std::setw(14) << "I^{1/2}" << std::setw(14) << "Var"
                  << '\n';
        QubitFixture q = qubit_fixture(0.75);
        MeasureContext half = alpha_context(q.rho.map, q.rho.rho, 0.5);
        MeasureContext classical = classical_context(q.rho);
        double i_half = scalar_of(skew_information(half, q.sx));
        double var = scalar_of(gen_variance(classical, q.sx));
        for (int i = 1; i <= 9; ++i) {
            double alpha = 0.1 * i;
            MeasureContext ctx = alpha_context(q.rho.map, q.rho.rho, alpha);
            double i_alpha = scalar_of(skew_information(ctx, q.sx));
            std::cout << std::left << std::setw(8) << alpha << std::right << std::setw(14)
                      << i_alpha << std::setw(14) << i_half << std::setw(14) << var
                      << '\n';
        }
        return 0;
    }
    throw ParseError("unknown demo: " + name + " (expected heisenberg|schrodinger|alpha_chain)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized covariance / skew-information toolkit"};
    app.require_subcommand(1);

    // verify
    std::string checks = "all", shapes_arg, kinds_arg, families_arg, out, format = "json";
    std::size_t instances = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    auto* verify = app.add_subcommand("verify", "Run inequality verification campaigns");
    verify->add_option("--checks", checks, "Comma-separated check ids, or 'all'");
    verify->add_option("--instances", instances, "Instances per check");
    verify->add_option("--seed", seed, "Master seed (QITINEQ_SEED overrides)");
    verify->add_option("--shapes", shapes_arg, "Algebra shapes, e.g. \"2,2;3\"");
    verify->add_option("--map-kinds", kinds_arg, "Comma-separated map kinds");
    verify->add_option("--pair-families", families_arg, "Comma-separated pair families");
    verify->add_option("--tolerance", tolerance, "Margin tolerance");
    verify->add_option("--out", out, "Report file path");
    verify->add_option("--format", format, "Report format: json|table")
        ->check(CLI::IsMember({"json", "table"}));

    // eval
    std::string measure, rho_path, a_path, b_path, f_spec = "id", g_spec = "const:1",
                map_arg;
    auto* eval = app.add_subcommand("eval", "Evaluate one measure on JSON inputs");
    eval->add_option("measure", measure, "cov|var|corr|skew|sym_corr")->required();
    eval->add_option("--rho", rho_path, "Density element JSON file")->required();
    eval->add_option("--a", a_path, "Element JSON file (A)")->required();
    eval->add_option("--b", b_path, "Element JSON file (B); defaults to A");
    eval->add_option("--f", f_spec, "f spec, e.g. pow:0.5");
    eval->add_option("--g", g_spec, "g spec, e.g. pow:0.5");
    eval->add_option("--map", map_arg, "Map JSON file; default scalar trace");

    // demo
    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "Print a qubit sweep table");
    demo->add_option("name", demo_name, "heisenberg|schrodinger|alpha_chain")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(checks, instances, seed, shapes_arg, kinds_arg,
                              families_arg, tolerance, out, format);
        if (eval->parsed())
            return cmd_eval(measure, rho_path, a_path, b_path, f_spec, g_spec, map_arg);
        if (demo->parsed()) return cmd_demo(demo_name);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
