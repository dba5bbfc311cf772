#include "cli.hpp"

#include "report.hpp"

#include "jacklab/jack.hpp"
#include "jacklab/measure.hpp"
#include "jacklab/plancherel.hpp"
#include "jacklab/ribbon.hpp"
#include "jacklab/toeplitz.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jacklab::cli {

namespace {

struct GlobalOptions {
    std::string format = "json";
    std::string output;
    int precision = 12;
    double chop = 0;
};

Json global_config(const GlobalOptions& g) {
    return Json{{"format", g.format},
                {"output", g.output.empty() ? "-" : g.output},
                {"precision", g.precision},
                {"chop", g.chop}};
}

Json spec_config(const JackMeasureSpec& spec) {
    Json modes = Json::object();
    for (std::size_t k = 1; k < spec.modes.size(); ++k)
        if (spec.modes[k] != 0) modes[std::to_string(k)] = to_string(spec.modes[k]);
    return Json{{"eps2", to_string(spec.eps.eps2)},
                {"eps1", to_string(spec.eps.eps1)},
                {"modes", modes},
                {"D", spec.truncation_degree}};
}

// "a", "a+bi", "a-bi", "bi".
Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    auto number = [&](const std::string& t) {
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) throw std::invalid_argument("cannot parse complex number '" + raw + "'");
        return x;
    };
    if (s.empty() || s.back() != 'i') return number(s);
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    auto imag = [&](std::string t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return number(t);
    };
    if (split == std::string::npos) return {0.0, imag(s)};
    return {number(s.substr(0, split)), imag(s.substr(split))};
}

// "n=value" entries separated by spaces or commas; n a nonzero integer, value rational or decimal.
LaurentSymbol parse_symbol(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::map<int, Complex> coeffs;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("symbol entry '" + token + "' is not of the form n=value");
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(token.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad symbol index in '" + token + "'");
        }
        if (!coeffs.emplace(n, to_double(parse_rational(token.substr(eq + 1)))).second)
            throw std::invalid_argument("symbol index " + std::to_string(n) + " given twice");
    }
    return LaurentSymbol(std::move(coeffs));
}

Json symbol_config(const LaurentSymbol& v) {
    Json out = Json::object();
    for (const auto& [n, c] : v.coeffs()) {
        if (c.imag() != 0) out[std::to_string(n)] = Json::array({c.real(), c.imag()});
        else out[std::to_string(n)] = c.real();
    }
    return out;
}

struct SymbolSource {
    std::string symbol;
    std::string spec;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--symbol", symbol, "Laurent coefficients as n=value entries");
        auto* b = cmd->add_option("--spec", spec, "Jack measure spec file; the symbol uses its modes");
        a->excludes(b);
    }

    LaurentSymbol resolve(Json& config) const {
        if (symbol.empty() == spec.empty()) throw std::invalid_argument("give exactly one of --symbol or --spec");
        LaurentSymbol v;
        if (!spec.empty()) {
            const auto s = load_spec(spec);
            config["spec"] = spec_config(s);
            v = LaurentSymbol::from_modes(s.assignment());
        } else {
            v = parse_symbol(symbol);
        }
        config["symbol"] = symbol_config(v);
        return v;
    }
};

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<Complex> parse_points(const std::vector<std::string>& raw) {
    std::vector<Complex> out;
    for (const auto& s : raw) out.push_back(parse_complex(s));
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// jack-table ---------------------------------------------------------------------------------------------------

struct JackTableOptions {
    int degree = 1;
    std::string eps2 = "-1";
    std::string eps1 = "1";
    bool check = false;
    int max_degree = kDefaultMaxTableDegree;
};

int jack_table(const JackTableOptions& o, Report& report) {
    if (o.degree < 0) throw std::invalid_argument("degree must be non-negative");
    if (o.degree > o.max_degree)
        throw std::invalid_argument("degree " + std::to_string(o.degree) + " exceeds --max-degree " +
                                    std::to_string(o.max_degree));
    const EpsilonPair eps(parse_rational(o.eps2), parse_rational(o.eps1));
    power_to_monomial(o.degree, o.max_degree);
    const auto& basis = jack_basis(o.degree, eps);
    report.set_columns({"lambda", "monomial", "coefficient", "norm"});
    const auto parts = partitions_of(o.degree);
    for (const auto& lambda : parts) {
        const auto coeffs = monomial_coefficients(basis.vectors.at(lambda), o.degree, eps);
        const std::string norm = to_string(basis.norms.at(lambda));
        for (const auto& mu : parts) {
            const auto it = coeffs.find(mu);
            report.add_row({lambda.str(), mu.str(), to_string(it == coeffs.end() ? Rational(0) : it->second), norm});
        }
    }
    if (!o.check) return kExitOk;
    const bool ok = stanley_cauchy_component(o.degree, eps).empty();
    report.summary()["stanley_cauchy"] = ok ? "pass" : "fail";
    return ok ? kExitOk : kExitTolerance;
}

// cumulant -----------------------------------------------------------------------------------------------------

struct CumulantOptions {
    std::string spec;
    std::vector<int> sites;
    std::string oracle = "series";
    double tolerance = 1e-9;
    int truncation = -1;
    double deficit_threshold = kDefaultDeficitThreshold;
    double deficit_weight = 10;
    int max_sites = 3;
    int max_length = 6;
};

int cumulant(const CumulantOptions& o, Report& report) {
    Json& config = report.config();
    if (o.sites.empty()) throw std::invalid_argument("--sites needs at least one length");
    if (static_cast<int>(o.sites.size()) > o.max_sites)
        throw std::invalid_argument("at most " + std::to_string(o.max_sites) + " sites are allowed");
    for (int l : o.sites)
        if (l < 0 || l > o.max_length)
            throw std::invalid_argument("site lengths must lie in [0, " + std::to_string(o.max_length) + "]");
    auto spec = load_spec(o.spec);
    if (o.truncation >= 0) spec.truncation_degree = o.truncation;
    config["spec"] = spec_config(spec);

    const Rational exact = aoe_cumulant(o.sites, spec.eps, spec.assignment());
    int total = 0, order = 0;
    for (int l : o.sites) {
        total += l;
        order += spec.support() * (l / 2);
    }

    report.set_columns({"sites", "ribbon", "ribbon_exact", "oracle", "oracle_exact", "abs_diff", "deficit", "allowance",
                        "pass"});
    if (o.oracle == "series") {
        // Exact mode-degree expansion; every coefficient up to `order` is kept, so the sum is exact.
        Rational series = 0;
        for (const auto& c : cumulant_series(spec, o.sites, order)) series += c;
        series.canonicalize();
        const double diff = std::abs(Rational(exact - series).get_d());
        const bool ok = diff <= o.tolerance;
        report.add_row({join(o.sites), exact.get_d(), to_string(exact), series.get_d(), to_string(series), diff, 0.0,
                        o.tolerance, ok});
        return ok ? kExitOk : kExitTolerance;
    }
    const double oracle = joint_cumulant_bruteforce(spec, o.sites, o.deficit_threshold);
    const double deficit = normalization_deficit(spec);
    const double mesh = std::max(spec.eps.eps1.get_d(), -spec.eps.eps2.get_d());
    const double edge = std::pow(mesh * (spec.truncation_degree + 1), total);
    const double allowance = o.tolerance + o.deficit_weight * deficit * edge;
    const double diff = std::abs(exact.get_d() - oracle);
    const bool ok = diff <= allowance;
    report.add_row({join(o.sites), exact.get_d(), to_string(exact), oracle, nullptr, diff, deficit, allowance, ok});
    return ok ? kExitOk : kExitTolerance;
}

// limit-shape --------------------------------------------------------------------------------------------------

struct GridOptions {
    double cmin = -2;
    double cmax = 2;
    int points = 41;
};

int limit_shape(const LaurentSymbol& v, const GridOptions& g, Report& report) {
    if (g.points < 2 || !(g.cmin < g.cmax)) throw std::invalid_argument("grid needs cmin < cmax and at least 2 points");
    const auto [lo, hi] = symbol_range(v);
    report.summary()["symbol_min"] = lo;
    report.summary()["symbol_max"] = hi;
    report.set_columns({"c", "xi", "slope"});
    for (int i = 0; i < g.points; ++i) {
        const double c = g.cmin + (g.cmax - g.cmin) * i / (g.points - 1);
        const double xi = spectral_shift_cdf(v, c);
        report.add_row({c, xi, 2 * xi - 1});
    }
    return kExitOk;
}

// clt ----------------------------------------------------------------------------------------------------------

int clt(const LaurentSymbol& v, const std::vector<Complex>& us, double tolerance, Report& report) {
    if (us.empty()) throw std::invalid_argument("--u needs at least one point");
    report.set_columns({"u1_re", "u1_im", "u2_re", "u2_im", "cov_re", "cov_im", "cov_welding_re", "cov_welding_im",
                        "mean_re", "mean_im"});
    double worst = 0;
    for (std::size_t i = 0; i < us.size(); ++i) {
        const Complex mean = clt_mean_stieltjes(v, us[i]);
        for (std::size_t j = i; j < us.size(); ++j) {
            const Complex cov = clt_covariance_stieltjes(v, us[i], us[j]);
            const Complex weld = clt_covariance_welding(v, us[i], us[j]);
            worst = std::max(worst, std::abs(cov - weld));
            report.add_row({us[i].real(), us[i].imag(), us[j].real(), us[j].imag(), cov.real(), cov.imag(),
                            weld.real(), weld.imag(), mean.real(), mean.imag()});
        }
    }
    const bool ok = worst <= tolerance;
    report.summary()["max_route_diff"] = worst;
    report.summary()["pass"] = ok;
    return ok ? kExitOk : kExitTolerance;
}

// sample -------------------------------------------------------------------------------------------------------

struct SampleOptions {
    std::string spec;
    long count = 1;
    std::uint64_t seed = 0;
    double deficit_threshold = kDefaultDeficitThreshold;
    long max_count = 1000000;
};

int sample_cmd(const SampleOptions& o, Report& report) {
    Json& config = report.config();
    if (o.count < 1 || o.count > o.max_count)
        throw std::invalid_argument("--count must lie in [1, " + std::to_string(o.max_count) + "]");
    const auto spec = load_spec(o.spec);
    config["spec"] = spec_config(spec);
    const JackSampler sampler(spec, o.deficit_threshold);
    std::uint64_t state = o.seed;
    report.set_columns({"index", "partition", "degree", "chvee2", "chvee3", "chvee4"});
    double s1 = 0, s2 = 0;
    std::vector<double> ch_sum(5, 0.0);
    for (long i = 0; i < o.count; ++i) {
        const Partition lambda = sampler.draw(state);
        const auto chv = ch_vee_list(lambda, spec.eps, 4);
        const double d = lambda.degree();
        s1 += d;
        s2 += d * d;
        for (int l = 2; l <= 4; ++l) ch_sum[l] += chv[l].get_d();
        report.add_row({i, lambda.str(), lambda.degree(), chv[2].get_d(), chv[3].get_d(), chv[4].get_d()});
    }
    const double n = static_cast<double>(o.count);
    const double mean = s1 / n;
    const double var = o.count > 1 ? (s2 - n * mean * mean) / (n - 1) : 0.0;
    report.summary()["deficit"] = sampler.deficit();
    report.summary()["mean_degree"] = mean;
    report.summary()["degree_stderr"] = std::sqrt(var / n);
    for (int l = 2; l <= 4; ++l) report.summary()["mean_chvee" + std::to_string(l)] = ch_sum[l] / n;
    return kExitOk;
}

// plancherel-check ---------------------------------------------------------------------------------------------

int plancherel_check(Report& report) {
    report.set_columns({"check", "abs_diff", "tolerance", "pass"});
    bool all = true;
    auto row = [&](const std::string& name, double diff, double tol) {
        const bool ok = diff <= tol;
        all = all && ok;
        report.add_row({name, diff, tol, ok});
    };
    auto catalan_series = [](Complex u, int lmax) {
        Complex s = 0.0, p = 1.0 / u;
        for (int l = 0; l <= lmax; ++l, p /= u * u) s += catalan(l).get_d() * p;
        return s;
    };
    row("catalan_series_u3", std::abs(catalan_series(3.0, 60) - semicircle_C(3.0, 1)), 1e-10);
    row("catalan_series_u4", std::abs(catalan_series(4.0, 60) - semicircle_C(4.0, 1)), 1e-10);
    row("catalan_series_u2+i", std::abs(catalan_series({2, 1}, 150) - semicircle_C({2, 1}, 1)), 1e-10);

    const auto z = LaurentSymbol::zhukovsky();
    double worst = 0;
    for (int i = 0; i <= 40; ++i) {
        const double c = -2 + 0.1 * i;
        worst = std::max(worst, std::abs(vkls_slope(c) - (2 * spectral_shift_cdf(z, c) - 1)));
    }
    row("vkls_vs_spectral_shift", worst, 1e-8);
    row("kerov_cov_bergman_3_4", std::abs(kerov_cov_stieltjes(3.0, 4.0, 50).value - clt_covariance_stieltjes(z, 3.0, 4.0)),
        1e-8);
    row("kerov_cov_welding_3_2+i", std::abs(kerov_cov_closed(3.0, {2, 1}) - clt_covariance_welding(z, 3.0, {2, 1})), 1e-8);
    for (Complex u : {Complex(3), Complex(2, 1)}) {
        const std::string tag = u.imag() == 0 ? "3" : "2+i";
        row("mean_quadrature_" + tag, std::abs(plancherel_mean_stieltjes(u) - plancherel_mean_quadrature(u)), 1e-8);
        row("mean_contour_" + tag, std::abs(plancherel_mean_stieltjes(u) - clt_mean_stieltjes(z, u)), 1e-8);
    }
    row("mean_hsum_3", std::abs(plancherel_mean_stieltjes(3.0) - clt_mean_hsum(z, 3.0)), 1e-8);
    row("micro_correction_factorization",
        std::abs(micro_cov_correction(3.0, 4.0, 60) + micro_s_closed(3.0) * micro_s_closed(4.0)), 1e-8);

    double dims = 0;
    for (int d = 0; d <= 10; ++d) {
        Integer s = 0;
        for (const auto& lambda : partitions_of(d)) s += dim_hook(lambda) * dim_hook(lambda);
        dims = std::max(dims, std::abs(Rational(s, factorial(static_cast<unsigned>(d)).get_num()).get_d() - 1));
    }
    row("dim_square_sum", dims, 0);

    // d^{n-1} kappa against its leading order at d = 1e4.
    double rel = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 6; ++b) {
            rel = std::max(rel, std::abs(depoisson_kappa({a, b}, 10000).get_d() * 1e4 / (-a * b) - 1));
            for (int c = 1; a + b + c <= 6; ++c) {
                const double lead = double(a) * b * c * (a + b + c - 1);
                rel = std::max(rel, std::abs(depoisson_kappa({a, b, c}, 10000).get_d() * 1e8 / lead - 1));
            }
        }
    row("depoisson_leading_order", rel, 1e-2);
    report.summary()["pass"] = all;
    return all ? kExitOk : kExitTolerance;
}

// toeplitz -----------------------------------------------------------------------------------------------------

struct ToeplitzOptions {
    std::string u;
    std::string probe = "factorization";
    int hmax = 3;
    int modes = 8;
    double tolerance = 1e-8;
};

int toeplitz(const LaurentSymbol& v, const ToeplitzOptions& o, Report& report) {
    if (o.hmax < 0 || o.modes < 1) throw std::invalid_argument("--hmax must be >= 0 and --modes >= 1");
    const Complex u = parse_complex(o.u);
    const auto f = wiener_hopf(v, u);
    report.summary()["gamma0"] = complex_pair(f.gamma0);
    report.summary()["samples"] = f.samples;
    if (o.probe == "factorization") {
        report.set_columns({"k", "log_plus_re", "log_plus_im", "log_minus_re", "log_minus_im"});
        auto at = [](const std::vector<Complex>& m, int k) { return k < static_cast<int>(m.size()) ? m[k] : Complex(0); };
        for (int k = 1; k <= o.modes; ++k) {
            const Complex p = at(f.plus_modes, k), m = at(f.minus_modes, k);
            report.add_row({k, p.real(), p.imag(), m.real(), m.imag()});
        }
        return kExitOk;
    }
    report.set_columns({"h_plus", "h_minus", "wiener_hopf_re", "wiener_hopf_im", "extraction_re", "extraction_im",
                        "abs_diff"});
    double worst = 0;
    for (int a = 0; a <= o.hmax; ++a)
        for (int b = 0; b <= o.hmax; ++b) {
            const Complex r = f.resolvent(a, b), e = resolvent_by_extraction(f, a, b);
            worst = std::max(worst, std::abs(r - e));
            report.add_row({a, b, r.real(), r.imag(), e.real(), e.imag(), std::abs(r - e)});
        }
    const bool ok = worst <= o.tolerance;
    report.summary()["pass"] = ok;
    return ok ? kExitOk : kExitTolerance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jack measure, ribbon path and Toeplitz toolkit"};
    app.name("jacklab");
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", g.output, "Output file (default stdout)");
    app.add_option("--precision", g.precision, "Significant digits for floating output")->check(CLI::Range(1, 17));
    app.add_option("--chop", g.chop, "Write floating values below this magnitude as 0")->check(CLI::NonNegativeNumber);

    std::string name;
    Json config = Json::object();
    std::function<int(Report&)> command;
    auto bind = [&](const std::string& n, Json c, std::function<int(Report&)> f) {
        name = n;
        config = std::move(c);
        command = std::move(f);
    };

    JackTableOptions jt;
    auto* c_jack = app.add_subcommand("jack-table", "Monomial coefficients and norms of P-normalized Jack polynomials");
    c_jack->add_option("--degree,-d", jt.degree)->required();
    c_jack->add_option("--eps2", jt.eps2, "Negative parameter (rational)");
    c_jack->add_option("--eps1", jt.eps1, "Positive parameter (rational)");
    c_jack->add_flag("--check", jt.check, "Verify the Stanley-Cauchy identity at this degree");
    c_jack->add_option("--max-degree", jt.max_degree);
    c_jack->callback([&] {
        bind("jack-table",
             {{"degree", jt.degree}, {"eps2", jt.eps2}, {"eps1", jt.eps1}, {"check", jt.check},
              {"max_degree", jt.max_degree}},
             [&](Report& r) { return jack_table(jt, r); });
    });

    CumulantOptions cu;
    auto* c_cum = app.add_subcommand("cumulant", "Joint cumulant of ch-vee statistics by ribbon paths and brute force");
    c_cum->add_option("--spec", cu.spec)->required()->check(CLI::ExistingFile);
    c_cum->add_option("--sites", cu.sites, "Comma-separated lengths")->required()->delimiter(',');
    c_cum->add_option("--oracle", cu.oracle, "series (exact) or bruteforce (truncated sum)")
        ->check(CLI::IsMember({"series", "bruteforce"}));
    c_cum->add_option("--tolerance", cu.tolerance);
    c_cum->add_option("--truncation", cu.truncation, "Override the spec truncation degree");
    c_cum->add_option("--deficit-threshold", cu.deficit_threshold);
    c_cum->add_option("--deficit-weight", cu.deficit_weight);
    c_cum->add_option("--max-sites", cu.max_sites);
    c_cum->add_option("--max-length", cu.max_length);
    c_cum->callback([&] {
        bind("cumulant",
             {{"spec_file", cu.spec}, {"sites", cu.sites}, {"oracle", cu.oracle}, {"tolerance", cu.tolerance}, {"truncation", cu.truncation},
              {"deficit_threshold", cu.deficit_threshold}, {"deficit_weight", cu.deficit_weight},
              {"max_sites", cu.max_sites}, {"max_length", cu.max_length}},
             [&](Report& r) { return cumulant(cu, r); });
    });

    SymbolSource shape_src;
    GridOptions grid;
    auto* c_shape = app.add_subcommand("limit-shape", "Spectral shift function and limit-shape slope on a grid");
    shape_src.attach(c_shape);
    c_shape->add_option("--cmin", grid.cmin);
    c_shape->add_option("--cmax", grid.cmax);
    c_shape->add_option("--points", grid.points);
    c_shape->callback([&] {
        bind("limit-shape", {{"cmin", grid.cmin}, {"cmax", grid.cmax}, {"points", grid.points}},
             [&](Report& r) { return limit_shape(shape_src.resolve(r.config()), grid, r); });
    });

    SymbolSource clt_src;
    std::vector<std::string> clt_points;
    double clt_tolerance = 1e-8;
    auto* c_clt = app.add_subcommand("clt", "Covariance and mean shift of the Gaussian fluctuations at points u");
    clt_src.attach(c_clt);
    c_clt->add_option("--u", clt_points, "Points off the spectrum, e.g. 3 or 2+1i")->required();
    c_clt->add_option("--tolerance", clt_tolerance, "Allowed gap between the contour and welding routes");
    c_clt->callback([&] {
        bind("clt", {{"u", clt_points}, {"tolerance", clt_tolerance}}, [&](Report& r) {
            return clt(clt_src.resolve(r.config()), parse_points(clt_points), clt_tolerance, r);
        });
    });

    SampleOptions so;
    auto* c_sample = app.add_subcommand("sample", "Exact draws from a truncated Jack measure");
    c_sample->add_option("--spec", so.spec)->required()->check(CLI::ExistingFile);
    c_sample->add_option("--count", so.count);
    c_sample->add_option("--seed", so.seed);
    c_sample->add_option("--deficit-threshold", so.deficit_threshold);
    c_sample->add_option("--max-count", so.max_count);
    c_sample->callback([&] {
        bind("sample",
             {{"spec_file", so.spec}, {"count", so.count}, {"seed", so.seed},
              {"deficit_threshold", so.deficit_threshold}, {"max_count", so.max_count}},
             [&](Report& r) { return sample_cmd(so, r); });
    });

    auto* c_planch = app.add_subcommand("plancherel-check", "Closed-form checks for the Plancherel family");
    c_planch->callback([&] { bind("plancherel-check", Json::object(), plancherel_check); });

    SymbolSource toep_src;
    ToeplitzOptions to;
    auto* c_toep = app.add_subcommand("toeplitz", "Wiener-Hopf factorization and resolvent probes");
    toep_src.attach(c_toep);
    c_toep->add_option("--u", to.u, "Spectral parameter, e.g. 3 or 2+1i")->required();
    c_toep->add_option("--probe", to.probe)->check(CLI::IsMember({"factorization", "resolvent"}));
    c_toep->add_option("--hmax", to.hmax);
    c_toep->add_option("--modes", to.modes);
    c_toep->add_option("--tolerance", to.tolerance);
    c_toep->callback([&] {
        bind("toeplitz",
             {{"u", to.u}, {"probe", to.probe}, {"hmax", to.hmax}, {"modes", to.modes}, {"tolerance", to.tolerance}},
             [&](Report& r) { return toeplitz(toep_src.resolve(r.config()), to, r); });
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    Json full = global_config(g);
    for (const auto& [k, v] : config.items()) full[k] = v;
    Report report(name, std::move(full));
    int code = kExitOk;
    try {
        code = command(report);
    } catch (const std::exception& e) {
        err << "jacklab " << name << ": " << e.what() << "\n";
        return kExitValidation;
    }

    const Format format = parse_format(g.format);
    if (g.output.empty()) {
        report.write(out, format, g.precision, g.chop);
    } else {
        std::ofstream file(g.output);
        if (!file) {
            err << "jacklab: cannot open " << g.output << " for writing\n";
            return kExitValidation;
        }
        report.write(file, format, g.precision, g.chop);
    }
    if (code == kExitTolerance) err << "jacklab " << name << ": tolerance check failed\n";
    return code;
}

}  // namespace jacklab::cli
