#include "paralie_tools/cli.hpp"

#include "paralie_tools/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace paralie::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void print_json(std::ostream& out, const io::json& j) { out << j.dump(2) << '\n'; }

void print_matrix(std::ostream& out, const std::string& label, const Mat3& m) {
    out << label << ":\n";
    for (std::size_t r = 0; r < 3; ++r) {
        out << "  ";
        for (std::size_t c = 0; c < 3; ++c) out << std::setw(22) << std::setprecision(15) << m(r, c) + 0.0;
        out << '\n';
    }
}

std::string describe(const ClassParams& p) {
    std::ostringstream s;
    s << to_string(p.id) << " (alpha = " << p.alpha;
    if (has_beta(p.id)) s << ", beta = " << p.beta;
    s << ')';
    return s.str();
}

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ClassParams params_of(const CliConfig& cfg) {
    ClassParams p{cfg.class_id, cfg.alpha, cfg.beta};
    if (!has_beta(p.id)) p.beta = 0.0;
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return p;
}

std::array<double, 3> parse_coords(const std::string& text) {
    std::array<double, 3> out{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 3) throw UsageError("--coords expects exactly three values a,b,c");
        try {
            std::size_t used = 0;
            out[n] = std::stod(item, &used);
            if (used != item.size() || !std::isfinite(out[n])) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--coords: not a number: '" + item + "'");
        }
        ++n;
    }
    if (n != 3) throw UsageError("--coords expects exactly three values a,b,c");
    return out;
}

}  // namespace

// ------------------------------------------------------------------ construct

int cmd_construct(const CliConfig& cfg, std::ostream& out) {
    const ClassParams p = params_of(cfg);
    const StructureConstants c = class_algebra(p);
    const double defect = jacobi_defect(c);

    if (cfg.format == Format::Json) {
        io::json j = io::to_json(c);
        j.update(io::to_json(p));
        j["jacobi_defect"] = defect;
        print_json(out, j);
        return kOk;
    }
    out << "Lie algebra " << describe(p) << '\n';
    bool any = false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                if (c(i, j, k) == 0.0) continue;
                out << "  C_" << i << j << "^" << k << " = " << std::setprecision(17) << c(i, j, k)
                    << '\n';
                any = true;
            }
    if (!any) out << "  (Abelian: all brackets vanish)\n";
    out << "Jacobi defect: " << defect << '\n';
    return kOk;
}

// ------------------------------------------------------------------ classify

int cmd_classify(const CliConfig& cfg, Streams io) {
    std::string text;
    if (cfg.input_path == "-") {
        text = read_all(io.in);
    } else {
        std::ifstream f(cfg.input_path);
        if (!f) {
            io.err << "error: cannot open " << cfg.input_path << '\n';
            return kUsage;
        }
        text = read_all(f);
    }

    StructureConstants c;
    try {
        c = io::structure_constants_from_json(io::parse(text));
    } catch (const io::ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotALieAlgebra& e) {
        io.err << "error: " << e.what() << " (defect " << e.defect() << ")\n";
        return kNotLieAlgebra;
    }

    ClassReport report;
    try {
        report = classify_manifold(c, cfg.tol);
    } catch (const NotALieAlgebra& e) {
        io.err << "error: " << e.what() << '\n';
        if (cfg.format == Format::Json) {
            print_json(io.out, {{"error", "not a Lie algebra"}, {"jacobi_defect", e.defect()}});
        }
        return kNotLieAlgebra;
    }

    if (cfg.format == Format::Json) {
        print_json(io.out, io::to_json(report));
        return kOk;
    }
    std::ostream& out = io.out;
    out << "verdict:";
    for (ClassId id : report.verdict) out << ' ' << to_string(id);
    if (report.unclassified) out << " (unclassified remainder)";
    out << '\n';
    for (ClassId id : report.verdict) {
        if (id != ClassId::F0) out << "  " << describe(report.params(id)) << '\n';
    }
    out << std::setprecision(17);
    out << "residual: " << report.residual << '\n'
        << "theta: " << report.lee.theta << '\n'
        << "theta*: " << report.lee.theta_star << '\n'
        << "omega: " << report.lee.omega << '\n'
        << "para-Sasakian: " << (report.para_sasakian ? "yes" : "no") << '\n';
    return kOk;
}

// ------------------------------------------------------------------ exp

int cmd_exp(const CliConfig& cfg, std::ostream& out) {
    const ClassParams p = params_of(cfg);
    if (p.id == ClassId::F0) throw UsageError("exp: F0 is Abelian; e^A = E");
    const auto [a, b, c] = cfg.coords;
    ExpResult r = closed_form(p, a, b, c);
    if (cfg.oracle) r = with_oracle(r);
    const double d = det(r.expA);

    if (cfg.format == Format::Json) {
        io::json j = io::to_json(r);
        j.update(io::to_json(p));
        j["coords"] = {a, b, c};
        j["det_expA"] = d;
        print_json(out, j);
        return kOk;
    }
    out << "class " << describe(p) << ", coords (" << a << ", " << b << ", " << c << ")\n";
    print_matrix(out, "A", r.A);
    out << std::setprecision(17) << "tr A = " << trace(r.A) << ", tr A^2 = " << trace_sq(r.A)
        << '\n'
        << "branch: " << to_string(r.branch) << '\n'
        << "t = " << r.t << '\n'
        << "u = " << r.u << '\n';
    print_matrix(out, "e^A = E + tA + uA^2", r.expA);
    out << std::setprecision(17) << "det(e^A) = " << d << '\n';
    if (r.oracle_residual) out << "oracle residual: " << *r.oracle_residual << '\n';
    return kOk;
}

// ------------------------------------------------------------------ verify

std::vector<double> parameter_grid(Grid g) {
    if (g == Grid::Small) return {-1.0, 1.0};
    return {-2.0, -1.0, 0.5, 1.0, 2.0};
}

std::vector<double> coordinate_grid(Grid g) {
    if (g == Grid::Small) return {-1.0, 0.0, 1.0};
    return {-2.0, -1.0, 0.0, 1.0, 2.0};
}

namespace {

ClassGridResult verify_class(ClassId id, Grid g) {
    ClassGridResult res;
    res.id = id;
    const auto params = parameter_grid(g);
    const auto coords = coordinate_grid(g);
    for (double al : params) {
        for (double bt : params) {
            const ClassParams p{id, al, has_beta(id) ? bt : 0.0};
            const ClassReport rep = classify_manifold(class_algebra(p));
            const ClassParams got = rep.params(id);
            res.roundtrip_pure = res.roundtrip_pure && rep.is_pure() && rep.verdict.front() == id;
            res.max_roundtrip_error = std::max(
                {res.max_roundtrip_error, std::abs(got.alpha - p.alpha), std::abs(got.beta - p.beta)});
            for (double a : coords)
                for (double b : coords)
                    for (double c : coords) {
                        res.max_exp_residual =
                            std::max(res.max_exp_residual, verify_closed_form(p, a, b, c));
                        ++res.points;
                    }
        }
    }
    return res;
}

}  // namespace

std::vector<ClassGridResult> run_verify_grid(Grid g) {
    std::vector<std::future<ClassGridResult>> jobs;
    for (ClassId id : kBasicClasses) {
        jobs.push_back(std::async(std::launch::async, verify_class, id, g));
    }
    std::vector<ClassGridResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const auto results = run_verify_grid(cfg.grid);
    bool ok = true;
    double worst = 0.0;
    std::size_t points = 0;
    io::json rows = io::json::array();
    for (const auto& r : results) {
        const bool pass = r.roundtrip_pure && r.max_exp_residual <= cfg.tol &&
                          r.max_roundtrip_error <= cfg.tol;
        ok = ok && pass;
        worst = std::max(worst, r.max_exp_residual);
        points += r.points;
        rows.push_back({{"class", std::string(to_string(r.id))},
                        {"points", r.points},
                        {"max_exp_residual", r.max_exp_residual},
                        {"max_roundtrip_error", r.max_roundtrip_error},
                        {"roundtrip_pure", r.roundtrip_pure},
                        {"pass", pass}});
    }

    if (cfg.format == Format::Json) {
        print_json(out, {{"grid", cfg.grid == Grid::Full ? "full" : "small"},
                         {"tol", cfg.tol},
                         {"points", points},
                         {"max_exp_residual", worst},
                         {"classes", rows},
                         {"pass", ok}});
    } else {
        out << "grid: " << (cfg.grid == Grid::Full ? "full" : "small") << ", tol " << cfg.tol
            << '\n';
        out << std::left << std::setw(6) << "class" << std::right << std::setw(8) << "points"
            << std::setw(16) << "exp residual" << std::setw(16) << "roundtrip err" << "  verdict\n";
        for (const auto& row : rows) {
            out << std::left << std::setw(6) << row["class"].get<std::string>() << std::right
                << std::setw(8) << row["points"].get<std::size_t>() << std::setw(16)
                << std::setprecision(3) << row["max_exp_residual"].get<double>() << std::setw(16)
                << row["max_roundtrip_error"].get<double>() << "  "
                << (row["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
        }
        out << points << " points, max residual " << worst << ": " << (ok ? "PASS" : "FAIL")
            << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------------ table

int cmd_table(const CliConfig& cfg, std::ostream& out) {
    const auto [a, b, c] = cfg.coords;
    io::json rows = io::json::array();
    if (cfg.format == Format::Text) {
        out << "alpha = " << cfg.alpha << ", beta = " << cfg.beta << ", (a, b, c) = (" << a << ", "
            << b << ", " << c << ")\n";
    }
    for (ClassId id : kBasicClasses) {
        const ClassParams p{id, cfg.alpha, has_beta(id) ? cfg.beta : 0.0};
        const ExpResult r = closed_form(p, a, b, c);
        if (cfg.format == Format::Json) {
            rows.push_back({{"class", std::string(to_string(id))},
                            {"A", io::to_json(r.A)},
                            {"trA", trace(r.A)},
                            {"trA2", trace_sq(r.A)},
                            {"t", r.t},
                            {"u", r.u},
                            {"branch", std::string(to_string(r.branch))}});
            continue;
        }
        out << '\n' << to_string(id) << "  [" << to_string(r.branch) << "]\n";
        print_matrix(out, "A", r.A);
        out << std::setprecision(17) << "  tr A = " << trace(r.A) << "   tr A^2 = " << trace_sq(r.A)
            << "\n  t = " << r.t << "   u = " << r.u << '\n';
    }
    if (cfg.format == Format::Json) print_json(out, rows);
    return kOk;
}

// ------------------------------------------------------------------ dispatch

int run(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Lie algebras and matrix Lie groups of 3-dimensional almost paracontact "
                 "almost paracomplex Riemannian manifolds"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string class_text;
    std::string coords_text;
    std::string format_text = "text";
    std::string grid_text = "full";

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"text", "json"}, CLI::ignore_case));
        sub->add_option("-o,--output", cfg.output_path, "Output file, '-' for stdout");
    };
    auto add_class = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--class", class_text, "Basic class, e.g. F8 or f8");
        if (required) opt->required();
        sub->add_option("--alpha", cfg.alpha, "Class parameter alpha");
        sub->add_option("--beta", cfg.beta, "Second parameter beta (F1, F11)");
    };

    auto* construct = app.add_subcommand("construct", "Structure constants of a basic class");
    add_class(construct, true);
    add_format(construct);

    auto* classify = app.add_subcommand("classify", "Classify structure constants from JSON");
    classify->add_option("input", cfg.input_path, "Input JSON file, '-' for stdin");
    classify->add_option("--tol", cfg.tol, "Classification tolerance")->check(CLI::PositiveNumber);
    add_format(classify);

    auto* exp = app.add_subcommand("exp", "Closed-form group element e^A");
    add_class(exp, true);
    exp->add_option("--coords", coords_text, "Coordinates a,b,c")->required();
    exp->add_flag("--oracle", cfg.oracle, "Also report the residual against the series oracle");
    add_format(exp);

    auto* verify = app.add_subcommand("verify", "Check closed forms and classification on a grid");
    verify->add_option("--tol", cfg.tol, "Pass threshold")->check(CLI::PositiveNumber);
    verify->add_option("--grid", grid_text, "Grid size")
        ->check(CLI::IsMember({"full", "small"}, CLI::ignore_case));
    add_format(verify);

    auto* table = app.add_subcommand("table", "Numeric instantiation of the class table");
    double table_alpha = 1.0;
    double table_beta = 1.0;
    std::string table_coords = "1,1,1";
    table->add_option("--alpha", table_alpha, "Class parameter alpha")->capture_default_str();
    table->add_option("--beta", table_beta, "Second parameter beta (F1, F11)")->capture_default_str();
    table->add_option("--coords", table_coords, "Coordinates a,b,c")->capture_default_str();
    add_format(table);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    if (table->parsed()) {
        cfg.alpha = table_alpha;
        cfg.beta = table_beta;
        coords_text = table_coords;
    }

    try {
        cfg.format = CLI::detail::to_lower(format_text) == "json" ? Format::Json : Format::Text;
        cfg.grid = CLI::detail::to_lower(grid_text) == "small" ? Grid::Small : Grid::Full;
        if (!class_text.empty()) {
            const auto id = parse_class_id(class_text);
            if (!id) throw UsageError("unknown class '" + class_text + "'");
            cfg.class_id = *id;
        }
        if (!coords_text.empty()) cfg.coords = parse_coords(coords_text);

        std::ofstream file;
        if (cfg.output_path != "-") {
            file.open(cfg.output_path);
            if (!file) throw UsageError("cannot open " + cfg.output_path + " for writing");
        }
        std::ostream& out = cfg.output_path == "-" ? io.out : file;

        if (construct->parsed()) return cmd_construct(cfg, out);
        if (classify->parsed()) return cmd_classify(cfg, {io.in, out, io.err});
        if (exp->parsed()) return cmd_exp(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        return cmd_table(cfg, out);
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        io.err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace paralie::cli
