#include "qpolymat/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpolymat/codespec.hpp"
#include "qpolymat/verify.hpp"

namespace qpolymat {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const ExactPoly& p) {
    ordered_json j;
    j["vars"] = p.vars();
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        ordered_json t;
        t["exps"] = it->first;
        t["coeff"] = it->second.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["text"] = p.to_string();
    return j;
}

ExactPoly weight_enumerator(const RankMetricCode& C) {
    std::vector<mpz_class> A = weight_distribution(C);
    ExactPoly out(ring_xy());
    for (int w = 0; w <= C.n(); ++w) out.add_term({C.n() - w, w}, mpq_class(A[w]));
    return out;
}

struct Options {
    std::string file;
    bool json = false;
    long long cap = kDefaultCap;
    std::uint64_t seed = 1;
    int r = -1;
    std::string suite;
};

long long env_cap() {
    const char* v = std::getenv("QPOLYMAT_CAP");
    if (!v) return kDefaultCap;
    try {
        return std::stoll(v);
    } catch (...) {
        throw std::invalid_argument("QPOLYMAT_CAP is not an integer");
    }
}

int cmd_info(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    auto d = min_distance(C);
    if (opt.json) {
        ordered_json j;
        j["q"] = C.field().q();
        j["n"] = C.n();
        j["m"] = C.m();
        j["k"] = C.dim();
        j["min_distance"] = d ? ordered_json(*d) : ordered_json(nullptr);
        ordered_json gw = ordered_json::array();
        for (int r = 1; r <= C.dim(); ++r) gw.push_back(*generalized_weight(C, r));
        j["generalized_weights"] = std::move(gw);
        j["mrd"] = mrd_check(C);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "q = " << C.field().q() << ", n = " << C.n() << ", m = " << C.m() << ", k = " << C.dim()
        << "\n";
    out << "min distance d = " << (d ? std::to_string(*d) : "inf") << "\n";
    for (int r = 1; r <= C.dim(); ++r)
        out << "d^(" << r << ") = " << *generalized_weight(C, r) << "\n";
    out << "MRD: " << (mrd_check(C) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_weights(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    std::vector<mpz_class> A = weight_distribution(C);
    ExactPoly W = weight_enumerator(C);
    if (opt.json) {
        ordered_json j;
        ordered_json dist = ordered_json::array();
        for (const auto& a : A) dist.push_back(a.get_str());
        j["distribution"] = std::move(dist);
        j["enumerator"] = poly_json(W);
        out << j.dump(2) << "\n";
        return 0;
    }
    for (int w = 0; w <= C.n(); ++w) out << "A(" << w << ") = " << A[w].get_str() << "\n";
    out << "W(x, y) = " << W.to_string() << "\n";
    return 0;
}

int cmd_polymatroid(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    QMPolymatroid P = from_code(C);
    const LatticeIndex& lat = *P.lattice();
    if (opt.json) {
        ordered_json j;
        j["m"] = P.m();
        j["rank"] = P.rank();
        ordered_json table = ordered_json::array();
        for (int i = 0; i < lat.size(); ++i) {
            ordered_json row;
            row["subspace"] = lat.at(i).to_string();
            row["dim"] = lat.dim(i);
            row["rho"] = P.rho(i);
            table.push_back(std::move(row));
        }
        j["rank_table"] = std::move(table);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "(q, m)-polymatroid with m = " << P.m() << ", rank = " << P.rank() << "\n";
    for (int i = 0; i < lat.size(); ++i)
        out << "rho(" << lat.at(i).to_string() << ") = " << P.rho(i) << "\n";
    return 0;
}

int cmd_circuits(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    QMPolymatroid P = from_code(C);
    auto print_family = [&](const char* name, const std::vector<Subspace>& family,
                            ordered_json* sink) {
        if (sink) {
            ordered_json arr = ordered_json::array();
            for (const auto& s : family) arr.push_back(s.to_string());
            (*sink)[name] = std::move(arr);
            return;
        }
        out << name << ":\n";
        for (const auto& s : family) out << "  " << s.to_string() << "\n";
    };
    if (opt.json) {
        ordered_json j;
        print_family("circuits", circuits(P), &j);
        print_family("hyperplanes", hyperplanes(P), &j);
        print_family("cocircuits", cocircuits(P), &j);
        out << j.dump(2) << "\n";
        return 0;
    }
    print_family("circuits", circuits(P), nullptr);
    print_family("hyperplanes", hyperplanes(P), nullptr);
    print_family("cocircuits", cocircuits(P), nullptr);
    return 0;
}

int cmd_minsupports(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    std::vector<Subspace> ms = min_supports(C, opt.r);
    if (opt.json) {
        ordered_json j = ordered_json::array();
        for (const auto& s : ms) j.push_back(s.to_string());
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& s : ms) out << s.to_string() << "\n";
    return 0;
}

int cmd_moments(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    MomentTable mt = moments_from_code(C);
    if (opt.json) {
        ordered_json j;
        ordered_json B = ordered_json::array(), N = ordered_json::array();
        for (int r = 0; r <= mt.k; ++r) {
            ordered_json row = ordered_json::array();
            for (int w = 0; w <= mt.n; ++w) row.push_back(mt.B[r][w].get_str());
            B.push_back(std::move(row));
        }
        for (int a = 0; a <= mt.k; ++a) {
            ordered_json row = ordered_json::array();
            for (int w = 0; w <= mt.n; ++w) row.push_back(mt.N[a][w].get_str());
            N.push_back(std::move(row));
        }
        j["B"] = std::move(B);
        j["N"] = std::move(N);
        out << j.dump(2) << "\n";
        return 0;
    }
    for (int r = 0; r <= mt.k; ++r) {
        out << "B^(" << r << "):";
        for (int w = 0; w <= mt.n; ++w) out << " " << mt.B[r][w].get_str();
        out << "\n";
    }
    for (int a = 0; a <= mt.k; ++a) {
        out << "N^(" << a << "):";
        for (int w = 0; w <= mt.n; ++w) out << " " << mt.N[a][w].get_str();
        out << "\n";
    }
    return 0;
}

int cmd_mrd(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    MrdReport mr = mrd_report(C);
    if (opt.json) {
        ordered_json j;
        j["is_mrd"] = mr.is_mrd;
        j["d"] = mr.d ? ordered_json(*mr.d) : ordered_json(nullptr);
        j["k"] = mr.k;
        j["formula_stated_range"] = mr.formula_stated_range;
        j["formulas_match"] = mr.formulas_match;
        j["note"] = mr.note;
        out << j.dump(2) << "\n";
    } else {
        out << "MRD: " << (mr.is_mrd ? "yes" : "no") << "\n";
        out << "d = " << (mr.d ? std::to_string(*mr.d) : "inf") << ", k = " << mr.k << "\n";
        out << mr.note << "\n";
    }
    return mr.formulas_match ? 0 : 1;
}

int cmd_verify(const Options& opt, const RankMetricCode& C, std::ostream& out) {
    std::vector<SuiteReport> reports = verify_suite(opt.suite, C, opt.seed);
    bool all_pass = true;
    if (opt.json) {
        ordered_json j = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json suite;
            suite["suite"] = rep.suite;
            ordered_json lines = ordered_json::array();
            for (const auto& line : rep.lines) {
                ordered_json l;
                l["name"] = line.name;
                l["status"] = line.skipped ? "skip" : (line.pass ? "pass" : "fail");
                if (!line.detail.empty()) l["detail"] = line.detail;
                lines.push_back(std::move(l));
            }
            suite["checks"] = std::move(lines);
            suite["pass"] = rep.pass();
            all_pass = all_pass && rep.pass();
            j.push_back(std::move(suite));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            out << "== " << rep.suite << " ==\n";
            for (const auto& line : rep.lines) {
                out << (line.skipped ? "[SKIP] " : (line.pass ? "[PASS] " : "[FAIL] ")) << line.name;
                if (!line.detail.empty()) out << " -- " << line.detail;
                out << "\n";
            }
            all_pass = all_pass && rep.pass();
        }
        out << (all_pass ? "VERIFIED" : "FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations and identity verification for Delsarte rank-metric codes "
                 "and their (q, m)-polymatroids"};
    app.fallthrough();
    Options opt;
    try {
        opt.cap = env_cap();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_flag("--json", opt.json, "structured output");
    app.add_option("--cap", opt.cap, "enumeration guard (default 10^6 or QPOLYMAT_CAP)");
    app.add_option("--seed", opt.seed, "seed for randomized lemma checks");

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "code-description file")->required();
    };

    CLI::App* info = app.add_subcommand("info", "code parameters and generalized weights");
    add_file(info);
    CLI::App* weights = app.add_subcommand("weights", "rank-weight distribution and enumerator");
    add_file(weights);
    CLI::App* higher = app.add_subcommand("higher", "higher rank-weight enumerator W^(r)");
    higher->add_option("-r", opt.r, "subcode dimension")->required();
    add_file(higher);
    CLI::App* rankgen = app.add_subcommand("rankgen", "rank generating function of P_C");
    add_file(rankgen);
    CLI::App* whitney_cmd = app.add_subcommand("whitney", "two-variable Whitney form");
    add_file(whitney_cmd);
    CLI::App* polymatroid_cmd = app.add_subcommand("polymatroid", "rank table of P_C");
    add_file(polymatroid_cmd);
    CLI::App* circuits_cmd =
        app.add_subcommand("circuits", "circuits, hyperplanes and cocircuits of P_C");
    add_file(circuits_cmd);
    CLI::App* minsupports = app.add_subcommand("minsupports", "minimal higher supports");
    minsupports->add_option("-r", opt.r, "subcode dimension")->required();
    add_file(minsupports);
    CLI::App* moments = app.add_subcommand("moments", "q-Bernstein moment tables B and N");
    add_file(moments);
    CLI::App* mrd = app.add_subcommand("mrd", "MRD check and closed-form comparison");
    add_file(mrd);
    CLI::App* dual_cmd = app.add_subcommand("dual", "emit the trace-dual code");
    add_file(dual_cmd);
    CLI::App* transpose_cmd = app.add_subcommand("transpose", "emit the transposed code");
    add_file(transpose_cmd);
    CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
    verify->add_option("suite", opt.suite,
                       "axioms|duality|greene|inverse-greene|equivalence|cocircuits|singleton|"
                       "macwilliams|klove|mrd|lemmas|all")
        ->required();
    add_file(verify);
    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RankMetricCode C = build_code(load_code_spec(opt.file), opt.cap);
        if (info->parsed()) return cmd_info(opt, C, out);
        if (weights->parsed()) return cmd_weights(opt, C, out);
        if (higher->parsed()) {
            ExactPoly W = higher_enumerator_greene(C, opt.r);
            if (opt.json)
                out << poly_json(W).dump(2) << "\n";
            else
                out << W.to_string() << "\n";
            return 0;
        }
        if (rankgen->parsed()) {
            ExactPoly R = rank_gen_R(from_code(C));
            if (opt.json)
                out << poly_json(R).dump(2) << "\n";
            else
                out << R.to_string() << "\n";
            return 0;
        }
        if (whitney_cmd->parsed()) {
            ExactPoly W = whitney(from_code(C));
            if (opt.json)
                out << poly_json(W).dump(2) << "\n";
            else
                out << W.to_string() << "\n";
            return 0;
        }
        if (polymatroid_cmd->parsed()) return cmd_polymatroid(opt, C, out);
        if (circuits_cmd->parsed()) return cmd_circuits(opt, C, out);
        if (minsupports->parsed()) return cmd_minsupports(opt, C, out);
        if (moments->parsed()) return cmd_moments(opt, C, out);
        if (mrd->parsed()) return cmd_mrd(opt, C, out);
        if (dual_cmd->parsed()) {
            out << format_code_spec(dual_code(C), "trace dual");
            return 0;
        }
        if (transpose_cmd->parsed()) {
            out << format_code_spec(transpose_code(C), "transpose");
            return 0;
        }
        if (verify->parsed()) return cmd_verify(opt, C, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << opt.file << ": " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qpolymat
