// Command-line frontend: presentations, Groebner certificates, Hilbert
// series, Chen ranks, resonance varieties, and the batch verification suite.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umc/presentations.hpp"
#include "umc/resonance.hpp"
#include "umc/series.hpp"

using json = nlohmann::ordered_json;
using namespace umc;

namespace {

constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json mono_json(const Monomial& m) {
    json out = json::object();
    for (const auto& [v, e] : m.exponents())
        out[std::to_string(v.upper) + "," + std::to_string(v.lower)] = e;
    return out;
}

json element_json(const ModuleElement& e) {
    json terms = json::array();
    for (const auto& [t, c] : e.terms())
        terms.push_back({{"pos", {t.pos.i, t.pos.j, t.pos.k}},
                         {"mono", mono_json(t.mono)},
                         {"coef", to_string(c)}});
    return terms;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows) {
        json row = json::array();
        for (const auto& q : r) row.push_back(to_string(q));
        rows.push_back(std::move(row));
    }
    return rows;
}

json series_json(const RationalSeries& s, int expandTo) {
    json num = json::array();
    for (const auto& c : s.numerator()) num.push_back(c.get_str());
    json exp = json::array();
    for (const auto& c : s.expansion(expandTo)) exp.push_back(c.get_str());
    return {{"num", std::move(num)}, {"denomPower", s.denom_power()}, {"expansion", std::move(exp)}};
}

std::string kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Isolated: return "isolated";
        case ComponentKind::Embedded: return "embedded";
        case ComponentKind::McCoolPlane: return "plane";
        case ComponentKind::McCoolThreeSpace: return "threespace";
    }
    return "?";
}

json component_json(const Component& c) {
    return {{"kind", kind_name(c.kind)}, {"indices", c.indices},
            {"dim", c.space.dim()},     {"isotropy", c.isotropy},
            {"basis", matrix_json(c.space.basis)},
            {"equations", matrix_json(c.space.equations)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

LabeledSet pick_set(int n, const std::string& which) {
    if (which == "B") return gens_B(n);
    if (which == "G") return gens_G(n);
    return gens_Bprime(n);
}

int cmd_present(int n, const std::string& which, const std::string& format) {
    LabeledSet set = pick_set(n, which);
    if (format == "json") {
        json rows = json::array();
        for (const auto& item : set.items)
            rows.push_back({{"label", item.label.render()}, {"terms", element_json(item.elem)}});
        emit({{"n", n}, {"rank", binomial(n, 3).get_si()}, {"rows", std::move(rows)}});
    } else {
        std::cout << "generators of " << which << " at n=" << n << " (" << set.items.size()
                  << " rows, rank " << binomial(n, 3).get_si() << ")\n";
        for (const auto& item : set.items)
            std::cout << "  " << item.label.render() << ": " << to_string(item.elem) << "\n";
    }
    return 0;
}

int cmd_groebner(int n, const std::string& format, const BuchbergerOptions& opts) {
    auto certG = is_groebner(gens_G(n).plain());
    auto certBp = is_groebner(gens_Bprime(n).plain());
    bool same_initial = true;
    bool oracle_run = n <= 4;
    if (oracle_run) {
        auto fromB = buchberger(gens_B(n).plain(), opts);
        auto fromG = buchberger(gens_G(n).plain(), opts);
        same_initial =
            initial_module_of(fromB.elements) == initial_module_of(fromG.elements);
    }
    bool pass = certG.pass && certBp.pass && same_initial;
    if (format == "json") {
        emit({{"n", n},
              {"groebnerG", {{"pass", certG.pass}, {"pairsChecked", certG.pairs_checked}}},
              {"groebnerBprime", {{"pass", certBp.pass}, {"pairsChecked", certBp.pairs_checked}}},
              {"initialModuleOracle", {{"run", oracle_run}, {"pass", same_initial}}},
              {"pass", pass}});
    } else {
        std::cout << "groebner n=" << n << "\n";
        std::cout << "  basis G:  " << certG.render() << "\n";
        std::cout << "  basis B': " << certBp.render() << "\n";
        if (oracle_run)
            std::cout << "  initial-module oracle (buchberger on the presentation): "
                      << (same_initial ? "PASS" : "FAIL") << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : kExitCheckFail;
}

int cmd_hilbert(int n, const std::string& module, const std::string& format,
                const BuchbergerOptions& opts) {
    RationalSeries series, closed;
    if (module == "K") {
        series = hilb_fp(gens_B(n).plain(), opts) - hilb_fp(gens_Bprime(n).plain(), opts);
        closed = binomial(n, 4) * RationalSeries::monomial(1, 1) * RationalSeries::one_over(1);
    } else if (module == "Bprime") {
        series = hilb_fp(gens_Bprime(n).plain(), opts);
        closed = closed_hilb_Bnprime(n);
    } else {
        series = hilb_fp(gens_B(n).plain(), opts);
        closed = closed_hilb_Bn(n);
    }
    bool pass = series == closed;
    const int expandTo = 8;
    if (format == "json") {
        emit({{"n", n}, {"module", module}, {"series", series_json(series, expandTo)},
              {"matchesClosedForm", pass}});
    } else {
        std::cout << "hilbert n=" << n << " module=" << module << "\n";
        std::cout << "  series:    " << to_string(series) << "\n";
        std::cout << "  closed:    " << to_string(closed) << "\n";
        std::cout << "  expansion:";
        for (const auto& c : series.expansion(expandTo)) std::cout << " " << c.get_str();
        std::cout << "\n" << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : kExitCheckFail;
}

int cmd_chen(int n, int kMax, const std::string& format) {
    ChenTable closed = chen_closed(n, kMax);
    ChenTable series = chen_from_series(n, kMax);
    bool pass = closed.theta == series.theta;
    if (format == "json") {
        json theta = json::array();
        for (const auto& v : closed.theta) theta.push_back(v.get_str());
        emit({{"n", n}, {"series", series_json(closed_hilb_Bn(n), std::max(kMax - 1, 1))},
              {"theta", std::move(theta)}, {"pass", pass}});
    } else if (format == "csv") {
        std::cout << "k,theta_k\n";
        for (int k = 1; k <= kMax; ++k)
            std::cout << k << "," << closed.theta[static_cast<std::size_t>(k) - 1].get_str()
                      << "\n";
    } else {
        std::cout << "chen ranks n=" << n << ", k = 1.." << kMax << "\n ";
        for (const auto& v : closed.theta) std::cout << " " << v.get_str();
        std::cout << "\n  closed form vs series coefficients: " << (pass ? "PASS" : "FAIL")
                  << "\n";
    }
    return pass ? 0 : kExitCheckFail;
}

int cmd_resonance(int n, const std::string& check, int depth, unsigned seed,
                  const std::string& format, const BuchbergerOptions& opts) {
    json out = {{"n", n}, {"check", check}};
    bool pass = true;
    bool text = format != "json";
    if (text) std::cout << "resonance n=" << n << " check=" << check << "\n";

    if (check == "all" || check == "components" || check == "isotropy") {
        auto comps = components(n);
        json arr = json::array();
        for (const auto& c : comps) {
            arr.push_back(component_json(c));
            if (text)
                std::cout << "  " << c.name() << ": dim " << c.space.dim() << ", isotropy "
                          << c.isotropy << "\n";
        }
        out["components"] = std::move(arr);
        if (check != "components") {
            auto rep = verify_components(n, seed);
            pass = pass && rep.pass;
            out["verification"] = {{"pass", rep.pass}, {"checksRun", rep.checks_run},
                                   {"seed", rep.seed}, {"failures", rep.failures}};
            if (text) {
                std::cout << "  verification: " << (rep.pass ? "PASS" : "FAIL") << " ("
                          << rep.checks_run << " checks, seed " << rep.seed << ")\n";
                for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
            }
        }
    }
    if (check == "all" || check == "bound") {
        auto rep = upper_bound_check(n);
        pass = pass && rep.pass;
        out["upperBound"] = {{"pass", rep.pass}, {"checksRun", rep.checks_run},
                             {"failures", rep.failures}};
        if (text) {
            std::cout << "  diagonal upper bound: " << (rep.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
        }
    }
    if (check == "all" || check == "scheme") {
        auto rep = scheme(n, opts);
        pass = pass && rep.pass();
        json emb = json::array();
        for (const auto& c : rep.embedded) emb.push_back(component_json(c));
        out["scheme"] = {{"embedded", std::move(emb)},
                         {"knChecks", {{"pass", rep.kn.pass}, {"checksRun", rep.kn.checks_run}}},
                         {"perpendicular", rep.perpendicular_ok}};
        if (text) {
            std::cout << "  scheme: " << (rep.pass() ? "PASS" : "FAIL") << " ("
                      << rep.embedded.size() << " embedded components, kn "
                      << (rep.kn.pass ? "PASS" : "FAIL") << ", perpendicularity "
                      << (rep.perpendicular_ok ? "PASS" : "FAIL") << ")\n";
            for (const auto& c : rep.embedded)
                std::cout << "    " << c.name() << ": dim " << c.space.dim() << "\n";
        }
    }
    if (check == "all" || check == "depth") {
        auto rep = depth_lower_bound(n, depth);
        pass = pass && rep.pass;
        out["depth"] = {{"d", depth}, {"pass", rep.pass}, {"checksRun", rep.checks_run},
                        {"failures", rep.failures}};
        if (text) {
            std::cout << "  depth d=" << depth << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
                      << rep.checks_run << " pairs)\n";
            for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
        }
    }
    out["pass"] = pass;
    if (!text)
        emit(out);
    else
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : kExitCheckFail;
}

int cmd_compare(int n, const std::string& format) {
    auto rep = compare_groups(n);
    auto inventory = mccool_inventory(n);
    if (format == "json") {
        json inv = json::array();
        for (const auto& c : inventory) inv.push_back(component_json(c));
        emit({{"n", n},
              {"upper", {{"maxDim", rep.max_dim_upper},
                         {"hasNonIsotropic", rep.upper_has_nonisotropic}}},
              {"full", {{"maxDim", rep.max_dim_full}, {"planes", rep.planes},
                        {"threespaces", rep.threespaces}, {"allIsotropic", true}}},
              {"epiObstruction", rep.epi_obstruction}, {"inventory", std::move(inv)}});
    } else {
        std::cout << "comparison n=" << n << "\n";
        std::cout << "  upper McCool: max component dim " << rep.max_dim_upper
                  << (rep.upper_has_nonisotropic ? ", non-isotropic components present"
                                                 : ", all components isotropic")
                  << "\n";
        std::cout << "  full McCool:  max component dim " << rep.max_dim_full << " ("
                  << rep.planes << " planes, " << rep.threespaces
                  << " three-spaces, all isotropic)\n";
        if (rep.epi_obstruction)
            std::cout << "  no epimorphism from the full onto the upper group\n";
    }
    return 0;
}

struct SuiteCheck {
    std::string name;
    std::string status;  // PASS / FAIL / SKIPPED(budget)
    double seconds = 0;
};

int cmd_verify_all(int nMax, const std::string& format, const BuchbergerOptions& opts,
                   unsigned seed) {
    std::vector<SuiteCheck> checks;
    bool budget_hit = false;
    auto run = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteCheck c{name, "PASS", 0};
        try {
            if (!fn()) c.status = "FAIL";
        } catch (const BudgetExceeded&) {
            c.status = "SKIPPED(budget)";
            budget_hit = true;
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        checks.push_back(std::move(c));
    };

    for (int n = 3; n <= nMax; ++n) {
        std::string sn = std::to_string(n);
        run("presentation-count-n" + sn,
            [&] { return static_cast<long>(gens_B(n).items.size()) == m_total(n); });
        if (n <= 5) {
            run("groebner-G-n" + sn, [&] { return is_groebner(gens_G(n).plain()).pass; });
            run("groebner-Bprime-n" + sn,
                [&] { return is_groebner(gens_Bprime(n).plain()).pass; });
        }
        if (n <= 4)
            run("initial-module-oracle-n" + sn, [&] {
                return initial_module_of(buchberger(gens_B(n).plain(), opts).elements) ==
                       initial_module_of(buchberger(gens_G(n).plain(), opts).elements);
            });
        if (n <= 5) {
            run("hilbert-n" + sn,
                [&] { return hilb_fp(gens_B(n).plain(), opts) == closed_hilb_Bn(n); });
            run("ses-identity-n" + sn, [&] { return ses_identity(n, opts); });
        }
        run("chen-n" + sn,
            [&] { return chen_closed(n, 12).theta == chen_from_series(n, 12).theta; });
        if (n <= 5) {
            run("phi-star-n" + sn, [&] { return phi_star_equivalence(n, opts); });
            run("resonance-components-n" + sn,
                [&] { return verify_components(n, seed).pass; });
            run("resonance-bound-n" + sn, [&] { return upper_bound_check(n).pass; });
        }
        if (n >= 4 && n <= 5) {
            run("scheme-n" + sn, [&] { return scheme(n, opts).pass(); });
            run("depth-n" + sn + "-d2", [&] { return depth_lower_bound(n, 2).pass; });
        }
    }
    run("annihilator-example", [&] { return ann_membership_example87(opts).pass; });

    std::sort(checks.begin(), checks.end(),
              [](const SuiteCheck& a, const SuiteCheck& b) { return a.name < b.name; });
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.status != "FAIL";
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"status", c.status}});
        emit({{"nMax", nMax}, {"checks", std::move(arr)}, {"pass", pass}});
    } else {
        for (const auto& c : checks) std::cout << "  " << c.status << "  " << c.name << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
    }
    if (!pass) return kExitCheckFail;
    return budget_hit ? kExitBudget : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of the upper McCool groups: presentations, Groebner "
                 "certificates, Hilbert series, Chen ranks, and resonance varieties"};
    app.require_subcommand(1);

    int n = 4, kMax = 12, depth = 2, nMax = 5;
    unsigned seed = 20240901;
    std::uint64_t pairBudget = 1'000'000;
    bool force = false;
    std::string format = "text", which = "B", module = "B", check = "all";

    auto add_common = [&](CLI::App* c, bool csv = false) {
        c->add_option("--format", format,
                      csv ? "output format: text, json, or csv" : "output format: text or json")
            ->check(csv ? CLI::IsMember({"text", "json", "csv"})
                        : CLI::IsMember({"text", "json"}));
        c->add_option("--pair-budget", pairBudget, "S-pair budget for basis completion");
        c->add_flag("--force", force, "lift the default size cap on n");
    };

    auto* present = app.add_subcommand("present", "print a labeled generating set");
    present->add_option("--n", n, "index bound")->required()->check(CLI::Range(2, 64));
    present->add_option("--which", which, "generating set: B, G, or Bprime")
        ->check(CLI::IsMember({"B", "G", "Bprime"}));
    add_common(present);

    auto* groebner = app.add_subcommand("groebner", "certify the Groebner bases");
    groebner->add_option("--n", n, "index bound")->required()->check(CLI::Range(3, 64));
    add_common(groebner);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the Alexander invariant");
    hilbert->add_option("--n", n, "index bound")->required()->check(CLI::Range(3, 64));
    hilbert->add_option("--module", module, "module: B, Bprime, or K")
        ->check(CLI::IsMember({"B", "Bprime", "K"}));
    add_common(hilbert);

    auto* chen = app.add_subcommand("chen", "Chen ranks");
    chen->add_option("--n", n, "index bound")->required()->check(CLI::Range(2, 64));
    chen->add_option("--k-max", kMax, "largest k")->check(CLI::Range(1, 4096));
    add_common(chen, /*csv=*/true);

    auto* resonance = app.add_subcommand("resonance", "first resonance variety");
    resonance->add_option("--n", n, "index bound")->required()->check(CLI::Range(3, 64));
    resonance->add_option("--check", check,
                          "all, components, isotropy, bound, scheme, or depth")
        ->check(CLI::IsMember({"all", "components", "isotropy", "bound", "scheme", "depth"}));
    resonance->add_option("--depth", depth, "depth d for the lower-bound check")
        ->check(CLI::Range(2, 64));
    resonance->add_option("--seed", seed, "seed for sampled membership checks");
    add_common(resonance);

    auto* compare = app.add_subcommand("compare", "upper vs full McCool resonance inventory");
    compare->add_option("--n", n, "index bound")->required()->check(CLI::Range(2, 64));
    add_common(compare);

    auto* schemeCmd = app.add_subcommand("scheme", "resonance scheme with embedded components");
    schemeCmd->add_option("--n", n, "index bound")->required()->check(CLI::Range(4, 64));
    add_common(schemeCmd);

    auto* verify = app.add_subcommand("verify-all", "run the whole verification suite");
    verify->add_option("--n-max", nMax, "largest n")->check(CLI::Range(3, 64));
    verify->add_option("--seed", seed, "seed for sampled membership checks");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    BuchbergerOptions opts;
    opts.pair_budget = pairBudget;
    auto capped = [&](int cap, const char* name) {
        if (n > cap && !force) {
            std::cerr << name << ": n=" << n << " exceeds the default cap " << cap
                      << " (pass --force to override)\n";
            return true;
        }
        return false;
    };

    try {
        if (present->parsed()) return cmd_present(n, which, format);
        if (groebner->parsed())
            return capped(5, "groebner") ? kExitUsage : cmd_groebner(n, format, opts);
        if (hilbert->parsed())
            return capped(8, "hilbert") ? kExitUsage : cmd_hilbert(n, module, format, opts);
        if (chen->parsed()) return capped(8, "chen") ? kExitUsage : cmd_chen(n, kMax, format);
        if (resonance->parsed())
            return capped(6, "resonance") ? kExitUsage
                                          : cmd_resonance(n, check, depth, seed, format, opts);
        if (compare->parsed()) return cmd_compare(n, format);
        if (schemeCmd->parsed())
            return capped(5, "scheme")
                       ? kExitUsage
                       : cmd_resonance(n, "scheme", depth, seed, format, opts);
        if (verify->parsed()) return cmd_verify_all(nMax, format, opts, seed);
    } catch (const BudgetExceeded& b) {
        std::cerr << "S-pair budget of " << b.budget << " exhausted; partial results only\n";
        return kExitBudget;
    }
    return kExitUsage;
}
