// Command-line front end: every scan and verification in the library is
// exposed as a subcommand.  Default output is CSV with a header row on
// stdout; --json emits the same columns as an array of row objects (values
// kept as the exact CSV strings).  Diagnostics and sweep summaries go to
// stderr so stdout stays machine-readable.  Exit codes: 0 success, 1 usage
// or input error, 2 verification failure.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "paralat/arith.hpp"
#include "paralat/asymptotics.hpp"
#include "paralat/dirichlet.hpp"
#include "paralat/expsum.hpp"
#include "paralat/formula.hpp"
#include "paralat/lattice.hpp"
#include "paralat/omega.hpp"
#include "paralat/rational.hpp"

using paralat::Rat;
using paralat::i128;
namespace arith = paralat::arith;
namespace dirichlet = paralat::dirichlet;
namespace lattice = paralat::lattice;
namespace formula = paralat::formula;
namespace expsum = paralat::expsum;
namespace omega = paralat::omega;
namespace asymptotics = paralat::asymptotics;

namespace {

std::string fd(double v, int prec = 6) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json extras = nlohmann::ordered_json::object();

    void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }

    void emit(bool json) const {
        if (json) {
            nlohmann::ordered_json out = nlohmann::ordered_json::object();
            for (auto it = extras.begin(); it != extras.end(); ++it) out[it.key()] = it.value();
            out["rows"] = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = r[i];
                out["rows"].push_back(obj);
            }
            std::cout << out.dump(2) << "\n";
            return;
        }
        for (size_t i = 0; i < cols.size(); ++i)
            std::cout << cols[i] << (i + 1 < cols.size() ? "," : "\n");
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i)
                std::cout << r[i] << (i + 1 < r.size() ? "," : "\n");
        }
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t pos = s.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    for (const auto& part : split_commas(s)) out.push_back(Rat::parse(part));
    return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    for (const auto& part : split_commas(s)) out.push_back((long long)paralat::parse_i128(part));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& part : split_commas(s)) {
        size_t used = 0;
        double v = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad number: " + part);
        out.push_back(v);
    }
    return out;
}

lattice::RatQuadForm form_from_string(int k, const std::string& q) {
    auto entries = parse_rat_list(q);
    if (entries.size() != (size_t)k * (k + 1) / 2)
        throw std::invalid_argument("form needs " + std::to_string(k * (k + 1) / 2) +
                                    " upper-triangle entries (row major), got " +
                                    std::to_string(entries.size()));
    return lattice::RatQuadForm::from_upper(k, entries);
}

lattice::ParaboloidSpec spec_from_args(int dim, const std::string& q, const std::string& c,
                                       const std::string& beta, const std::string& beta_exact) {
    auto Q = form_from_string(dim - 1, q);
    Rat cr = Rat::parse(c);
    if (!beta.empty() && !beta_exact.empty())
        throw std::invalid_argument("--beta and --beta-exact are mutually exclusive");
    if (!beta_exact.empty())
        return lattice::ParaboloidSpec::with_rational_shift(dim, std::move(Q), cr,
                                                            parse_rat_list(beta_exact));
    if (!beta.empty())
        return lattice::ParaboloidSpec::with_real_shift(dim, std::move(Q), cr,
                                                        parse_double_list(beta));
    return lattice::ParaboloidSpec::centered(dim, std::move(Q), cr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice point counts, error-term formulas, and exponential-sum scans for parabolic regions"};
    app.require_subcommand(1);
    app.fallthrough();  // --json/--seed/--jobs may follow the subcommand

    bool json = false;
    uint64_t seed = 0;
    int jobs = 1;
    app.add_flag("--json", json, "emit JSON ({...,\"rows\":[{col:value}]}) instead of CSV");
    app.add_option("--seed", seed, "RNG seed for sampled sweeps (default 0)");
    app.add_option("--jobs", jobs, "worker threads; output order is input order regardless");

    // count
    auto* c_count = app.add_subcommand("count", "lattice points of the dilated region");
    int dim = 2;
    std::string qstr, cstr = "1", betastr, betaexstr, rstr;
    c_count->add_option("--dim", dim, "ambient dimension d >= 2")->required();
    c_count->add_option("--q", qstr, "form upper triangle, e.g. \"1,1/2,2\" for x^2+xy+2y^2")->required();
    c_count->add_option("--c", cstr, "height c > 0 (rational)");
    c_count->add_option("--beta", betastr, "shift as decimals (floating path, ties flagged)");
    c_count->add_option("--beta-exact", betaexstr, "shift as rationals (exact path)");
    c_count->add_option("--r", rstr, "radius R (integer; rationals allowed when dim = 2)")->required();
    c_count->footer("columns: R,count,ambiguous");

    // formula
    auto* c_formula = app.add_subcommand("formula", "closed-form error term E(N) for the model parabola");
    uint64_t formula_n = 0;
    std::string method = "exact";
    c_formula->add_option("--n", formula_n, "odd N")->required();
    c_formula->add_option("--method", method, "exact | 4k1 | sqfree")
        ->check(CLI::IsMember({"exact", "4k1", "sqfree"}));
    c_formula->footer("columns: N,error,error_exact");

    // verify
    auto* c_verify = app.add_subcommand("verify", "formula vs direct count for every odd N <= max");
    uint64_t verify_max = 0;
    c_verify->add_option("--max", verify_max, "upper bound for odd N")->required();
    c_verify->footer("columns: N,formula,count (only mismatches); final line mismatches,<k>; exit 2 if k > 0");

    // classnum
    auto* c_classnum = app.add_subcommand("classnum", "class number h(-d) and reduced forms");
    uint64_t cn_d = 0;
    bool cn_forms = false;
    c_classnum->add_option("--d", cn_d, "d = 3 mod 4 squarefree")->required();
    c_classnum->add_flag("--forms", cn_forms, "list reduced forms a,b,c instead");
    c_classnum->footer("columns: d,h   (--forms: a,b,c)");

    // lfun
    auto* c_lfun = app.add_subcommand("lfun", "L(1, chi_{-d}) with exact rational part");
    uint64_t lf_d = 0;
    c_lfun->add_option("--d", lf_d, "d = 3 mod 4")->required();
    c_lfun->footer("columns: d,value,rational_part,d0,f");

    // gauss
    auto* c_gauss = app.add_subcommand("gauss", "quadratic Gauss sum G(m; N)");
    uint64_t g_m = 0, g_n = 0;
    c_gauss->add_option("--m", g_m, "m >= 1")->required();
    c_gauss->add_option("--n", g_n, "N >= 1 (closed form only for odd N)")->required();
    c_gauss->footer("columns: m,N,re_direct,im_direct,im_closed (im_closed empty for even N)");

    // farey
    auto* c_farey = app.add_subcommand("farey", "dissection arc containing x");
    double f_x = 0;
    long long f_order = 0;
    c_farey->add_option("--x", f_x, "point (reduced mod 1)")->required();
    c_farey->add_option("--order", f_order, "Farey order >= 1")->required();
    c_farey->footer("columns: x,a,q,lo,hi");

    // expsum
    auto* c_expsum = app.add_subcommand("expsum", "theta partial sums and scaled sup ratios");
    std::string es_q;
    long long es_n = 0;
    int es_samples = 200;
    std::optional<double> es_x, es_alpha, es_beta;
    c_expsum->add_option("--q", es_q, "integral binary form upper triangle, e.g. \"1,1/2,2\"")->required();
    c_expsum->add_option("--n", es_n, "cap N >= 2")->required();
    c_expsum->add_option("--samples", es_samples, "number of seeded samples (default 200)");
    c_expsum->add_option("--x", es_x, "evaluate a single point instead of sampling");
    c_expsum->add_option("--alpha", es_alpha, "linear phase alpha (single-point mode)");
    c_expsum->add_option("--beta", es_beta, "linear phase beta (single-point mode)");
    c_expsum->footer("columns: idx,x,alpha,beta,a,q,abs_theta,ratio; stderr: max ratio");

    // hl
    auto* c_hl = app.add_subcommand("hl", "one-dimensional quadratic Weyl sum ratios");
    long long hl_n = 0;
    int hl_samples = 200;
    std::optional<double> hl_x;
    c_hl->add_option("--n", hl_n, "truncation N >= 1")->required();
    c_hl->add_option("--samples", hl_samples, "number of seeded samples (default 200)");
    c_hl->add_option("--x", hl_x, "evaluate a single point instead of sampling");
    c_hl->footer("columns: idx,x,a,q,abs_sum,ratio; stderr: max ratio");

    // omega
    auto* c_omega = app.add_subcommand("omega", "extremal-error constructions");
    std::string om_mode;
    long long om_m = 0, om_mmax = 0, om_rmax = 0;
    uint64_t om_max = 0;
    long long om_top = 0;
    std::string om_q = "1,0,1", om_c = "1", om_rlist;
    c_omega->add_option("--mode", om_mode, "family | plus | minus | boundary3d")
        ->required()
        ->check(CLI::IsMember({"family", "plus", "minus", "boundary3d"}));
    c_omega->add_option("--m", om_m, "family: parameter M");
    c_omega->add_option("--m-max", om_mmax, "plus: scan M <= m-max");
    c_omega->add_option("--max", om_max, "minus: scan odd squarefree N <= max");
    c_omega->add_option("--top", om_top, "minus: keep only the first k records (0 = all)");
    c_omega->add_option("--q", om_q, "boundary3d: primitive integral binary form (default 1,0,1)");
    c_omega->add_option("--c", om_c, "boundary3d: height (default 1)");
    c_omega->add_option("--r-list", om_rlist, "boundary3d: comma-separated square radii");
    c_omega->add_option("--r-max", om_rmax, "boundary3d: all squares <= r-max");
    c_omega->footer(
        "columns: family x,y | plus M,N,error_exact,normalized | minus N,error_exact,normalized | "
        "boundary3d R,count,ratio");

    // scan
    auto* c_scan = app.add_subcommand("scan", "error records over a radius list plus exponent fit");
    int sc_dim = 2;
    std::string sc_q, sc_c = "1", sc_beta, sc_betaex, sc_rlist;
    long long sc_rmin = 0, sc_rmax = 0, sc_rstep = 1;
    c_scan->add_option("--dim", sc_dim, "ambient dimension d >= 2")->required();
    c_scan->add_option("--q", sc_q, "form upper triangle")->required();
    c_scan->add_option("--c", sc_c, "height c > 0");
    c_scan->add_option("--beta", sc_beta, "shift as decimals");
    c_scan->add_option("--beta-exact", sc_betaex, "shift as rationals");
    c_scan->add_option("--r-list", sc_rlist, "explicit comma-separated radii");
    c_scan->add_option("--r-min", sc_rmin, "range start (with --r-max)");
    c_scan->add_option("--r-max", sc_rmax, "range end");
    c_scan->add_option("--r-step", sc_rstep, "range step (default 1)");
    c_scan->footer("columns: R,count,ambiguous,volume_term,error; fit summary on stderr (and in JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Table t;
        int exit_code = 0;

        if (*c_count) {
            auto spec = spec_from_args(dim, qstr, cstr, betastr, betaexstr);
            Rat R = Rat::parse(rstr);
            t.cols = {"R", "count", "ambiguous"};
            if (!R.is_integer()) {
                if (dim != 2)
                    throw std::invalid_argument("rational R requires dim 2");
                if (spec.Q.at(0, 0) != Rat(1) || spec.c != Rat(1) || !spec.rational_beta ||
                    !spec.beta_rat[0].is_zero())
                    throw std::invalid_argument(
                        "rational R is supported for the model parabola only (q=1, c=1, beta=0)");
                i128 cnt = lattice::count_parabola_2d(R);
                t.row({R.str(), paralat::to_string_i128(cnt), "0"});
            } else {
                auto res = lattice::count_paraboloid(spec, (long long)R.num());
                t.row({R.str(), paralat::to_string_i128(res.count),
                       std::to_string(res.ambiguous_fibers)});
            }
        } else if (*c_formula) {
            Rat E = method == "exact"    ? formula::error_term_exact(formula_n)
                    : method == "4k1"    ? formula::error_term_cor_4k1(formula_n)
                                         : formula::error_term_cor_sqfree(formula_n);
            t.cols = {"N", "error", "error_exact"};
            t.row({std::to_string(formula_n), fd(E.to_double()), E.str()});
        } else if (*c_verify) {
            auto mism = formula::verify_formula_range(verify_max, jobs);
            t.cols = {"N", "formula", "count"};
            for (const auto& m : mism)
                t.row({std::to_string(m.N), m.formula_value.str(), paralat::to_string_i128(m.count)});
            t.extras["mismatches"] = mism.size();
            if (!json) {
                t.emit(false);
                std::cout << "mismatches," << mism.size() << "\n";
                return mism.empty() ? 0 : 2;
            }
            exit_code = mism.empty() ? 0 : 2;
        } else if (*c_classnum) {
            if (cn_forms) {
                t.cols = {"a", "b", "c"};
                for (const auto& f : dirichlet::reduced_forms(-(long long)cn_d))
                    t.row({std::to_string(f.a), std::to_string(f.b), std::to_string(f.c)});
            } else {
                t.cols = {"d", "h"};
                t.row({std::to_string(cn_d), std::to_string(dirichlet::class_number(cn_d))});
            }
        } else if (*c_lfun) {
            auto lv = dirichlet::l_value(lf_d);
            t.cols = {"d", "value", "rational_part", "d0", "f"};
            t.row({std::to_string(lv.d), fd(lv.value, 9), lv.rational_part.str(),
                   std::to_string(lv.d0), std::to_string(lv.f)});
        } else if (*c_gauss) {
            auto g = dirichlet::gauss_sum_direct(g_m, g_n);
            std::string closed;
            if (g_n % 2 == 1) closed = fd(dirichlet::gauss_sum_im_closed(g_m, g_n), 9);
            t.cols = {"m", "N", "re_direct", "im_direct", "im_closed"};
            t.row({std::to_string(g_m), std::to_string(g_n), fd(g.real(), 9), fd(g.imag(), 9), closed});
        } else if (*c_farey) {
            auto arc = expsum::farey_locate(f_x, f_order);
            t.cols = {"x", "a", "q", "lo", "hi"};
            t.row({fd(f_x, 9), std::to_string(arc.a), std::to_string(arc.q), arc.lo.str(),
                   arc.hi.str()});
        } else if (*c_expsum) {
            auto Q = form_from_string(2, es_q);
            t.cols = {"idx", "x", "alpha", "beta", "a", "q", "abs_theta", "ratio"};
            double maxr = 0;
            auto put = [&](int idx, const expsum::SweepSample& s) {
                t.row({std::to_string(idx), fd(s.x, 9), fd(s.alpha, 9), fd(s.beta, 9),
                       std::to_string(s.a), std::to_string(s.q), fd(s.abs_sum), fd(s.ratio)});
                if (s.ratio > maxr) maxr = s.ratio;
            };
            if (es_x) {
                expsum::SweepSample s{};
                s.x = *es_x;
                s.alpha = es_alpha.value_or(0.0);
                s.beta = es_beta.value_or(0.0);
                auto parts = expsum::prop31_parts(Q, s.alpha, s.beta, s.x, es_n);
                s.a = parts.arc.a;
                s.q = parts.arc.q;
                s.abs_sum = std::abs(parts.S);
                s.ratio = expsum::prop31_ratio(Q, s.alpha, s.beta, s.x, es_n);
                put(0, s);
            } else {
                auto sweep = expsum::prop31_sweep(Q, es_n, es_samples, seed, jobs);
                for (size_t i = 0; i < sweep.size(); ++i) put((int)i, sweep[i]);
            }
            t.extras["max_ratio"] = fd(maxr);
            std::cerr << "max ratio " << fd(maxr) << "\n";
        } else if (*c_hl) {
            t.cols = {"idx", "x", "a", "q", "abs_sum", "ratio"};
            double maxr = 0;
            auto put = [&](int idx, const expsum::SweepSample& s) {
                t.row({std::to_string(idx), fd(s.x, 9), std::to_string(s.a), std::to_string(s.q),
                       fd(s.abs_sum), fd(s.ratio)});
                if (s.ratio > maxr) maxr = s.ratio;
            };
            if (hl_x) {
                expsum::SweepSample s{};
                s.x = *hl_x;
                auto parts = expsum::hl_parts(s.x, hl_n);
                s.a = parts.arc.a;
                s.q = parts.arc.q;
                s.abs_sum = std::abs(parts.S);
                s.ratio = expsum::hl_ratio(s.x, hl_n);
                put(0, s);
            } else {
                auto sweep = expsum::hl_sweep(hl_n, hl_samples, seed, jobs);
                for (size_t i = 0; i < sweep.size(); ++i) put((int)i, sweep[i]);
            }
            t.extras["max_ratio"] = fd(maxr);
            std::cerr << "max ratio " << fd(maxr) << "\n";
        } else if (*c_omega) {
            if (om_mode == "family") {
                if (om_m < 1) throw std::invalid_argument("--m required for --mode family");
                t.cols = {"x", "y"};
                for (const auto& [x, y] : omega::boundary_family_2d(om_m))
                    t.row({std::to_string(x), std::to_string(y)});
            } else if (om_mode == "plus") {
                if (om_mmax < 1) throw std::invalid_argument("--m-max required for --mode plus");
                auto res = omega::omega_plus_family(om_mmax);
                t.cols = {"M", "N", "error_exact", "normalized"};
                for (const auto& r : res.records) {
                    long long M = (long long)paralat::isqrt64(r.N);
                    t.row({std::to_string(M), std::to_string(r.N), r.error.str(), fd(r.normalized)});
                }
                for (long long M : res.skipped)
                    std::cerr << "skipped M=" << M << " (prime factor not 1 mod 4)\n";
            } else if (om_mode == "minus") {
                if (om_max < 1) throw std::invalid_argument("--max required for --mode minus");
                auto recs = omega::omega_minus_scan(om_max, jobs);
                if (om_top > 0 && (size_t)om_top < recs.size()) recs.resize((size_t)om_top);
                t.cols = {"N", "error_exact", "normalized"};
                for (const auto& r : recs)
                    t.row({std::to_string(r.N), r.error.str(), fd(r.normalized)});
            } else {  // boundary3d
                std::vector<long long> rl;
                if (!om_rlist.empty()) {
                    rl = parse_ll_list(om_rlist);
                } else if (om_rmax >= 1) {
                    for (long long k = 1; k * k <= om_rmax; ++k) rl.push_back(k * k);
                } else {
                    throw std::invalid_argument("--r-list or --r-max required for --mode boundary3d");
                }
                auto Q1 = form_from_string(2, om_q);
                t.cols = {"R", "count", "ratio"};
                for (const auto& r : omega::boundary_growth_3d(Q1, Rat::parse(om_c), rl))
                    t.row({std::to_string(r.R), paralat::to_string_i128(r.count), fd(r.ratio)});
            }
        } else if (*c_scan) {
            auto spec = spec_from_args(sc_dim, sc_q, sc_c, sc_beta, sc_betaex);
            std::vector<long long> rl;
            if (!sc_rlist.empty()) {
                rl = parse_ll_list(sc_rlist);
            } else if (sc_rmax >= 1) {
                if (sc_rmin < 1) sc_rmin = 1;
                if (sc_rstep < 1) throw std::invalid_argument("--r-step must be >= 1");
                for (long long R = sc_rmin; R <= sc_rmax; R += sc_rstep) rl.push_back(R);
            } else {
                throw std::invalid_argument("--r-list or --r-min/--r-max required");
            }
            auto scan = asymptotics::error_scan(spec, rl, jobs);
            t.cols = {"R", "count", "ambiguous", "volume_term", "error"};
            for (size_t i = 0; i < scan.records.size(); ++i) {
                const auto& r = scan.records[i];
                t.row({std::to_string(r.R), std::to_string(r.count),
                       std::to_string(scan.ambiguous[i]), fd(r.volume_term), fd(r.error)});
            }
            try {
                auto fit = asymptotics::fit_exponent(scan.records);
                std::cerr << "fit slope " << fd(fit.slope) << " max_norm " << fd(fit.max_normalized)
                          << " p95_norm " << fd(fit.p95_normalized) << " used " << fit.used
                          << " dropped " << fit.dropped << "\n";
                nlohmann::ordered_json jf = nlohmann::ordered_json::object();
                jf["slope"] = fd(fit.slope);
                jf["max_normalized"] = fd(fit.max_normalized);
                jf["p95_normalized"] = fd(fit.p95_normalized);
                jf["used"] = fit.used;
                jf["dropped"] = fit.dropped;
                t.extras["fit"] = jf;
            } catch (const std::invalid_argument& e) {
                std::cerr << "fit unavailable: " << e.what() << "\n";
                t.extras["fit"] = nullptr;
            }
        }

        t.emit(json);
        return exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
