// Command-line front end: group inspection, order construction, property
// checks with certificates, and the reproduction harness for the named
// computational claims.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>

#include "sperner/antichain.hpp"
#include "sperner/errors.hpp"
#include "sperner/flow_io.hpp"
#include "sperner/group.hpp"
#include "sperner/orders.hpp"
#include "sperner/poset_io.hpp"

using namespace sperner;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct Options {
    bool json = false;
    bool big = false;
    GroupBudgets budgets;
};

GroupBudgets budgets_from_env() {
    GroupBudgets b;
    if (const char* e = std::getenv("SPERNER_ELEMENT_BUDGET")) b.elements = std::atol(e);
    if (const char* e = std::getenv("SPERNER_TIME_BUDGET_SEC")) b.seconds = std::atof(e);
    return b;
}

json rat_pair(const Rat& r) { return json::array({rat_num(r).get_str(), rat_den(r).get_str()}); }

json poly_json(const RankPolynomial& p) {
    json arr = json::array();
    for (const Int& c : p) arr.push_back(c.get_str());
    return arr;
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------- group info

int cmd_group_info(const std::string& spec, const Options& opt) {
    auto g = parse_group_spec(spec, opt.budgets);
    long n = g->order();
    json doc;
    doc["group"] = g->name();
    doc["order"] = n;
    doc["rank"] = g->rank();
    doc["reflections"] = g->reflections().size();
    std::string text = "group " + g->name() + "\n  order: " + std::to_string(n) +
                       "\n  rank: " + std::to_string(g->rank()) +
                       "\n  reflections: " + std::to_string(g->reflections().size()) + "\n";

    // codimension generating function and its exponent factorization
    RankPolynomial codim_poly(g->rank() + 1, Int(0));
    for (long w = 0; w < n; ++w) codim_poly[g->codim(int(w))] += 1;
    while (codim_poly.size() > 1 && codim_poly.back() == 0) codim_poly.pop_back();
    doc["codim_generating_function"] = poly_json(codim_poly);
    text += "  codim generating function: " + poly_str(codim_poly) + "\n";
    if (auto exps = factor_exponents(codim_poly)) {
        json earr = json::array();
        std::string estr;
        for (const Int& e : *exps) {
            earr.push_back(e.get_str());
            estr += (estr.empty() ? "" : ", ") + e.get_str();
        }
        doc["exponents"] = std::move(earr);
        text += "  exponents: {" + estr + "}\n";
    }
    if (n <= 10000) {
        OrderDisagreement diff;
        bool agree = orders_agree(*g, &diff);
        doc["orders_agree"] = agree;
        text += std::string("  prefix = codim order: ") + (agree ? "yes" : "no") + "\n";
        if (!agree) {
            doc["first_disagreement"] = json::array({g->label(diff.u), g->label(diff.v)});
            text +=
                "    first disagreeing pair: (" + g->label(diff.u) + ", " + g->label(diff.v) + ")\n";
        }
    } else {
        doc["orders_agree"] = nullptr;
        text += "  prefix = codim order: not computed (order > 10000)\n";
    }
    emit(opt, doc, text);
    return kExitHolds;
}

// ---------------------------------------------------------------- order build

int cmd_order_build(const std::string& spec, const std::string& kind_str, const std::string& out,
                    const Options& opt) {
    auto g = parse_group_spec(spec, opt.budgets);
    OrderKind kind = parse_order_kind(kind_str);
    RankedPoset p = build_order(*g, kind);
    save_poset_file(out, p);
    json doc;
    doc["group"] = g->name();
    doc["kind"] = order_kind_name(kind);
    doc["elements"] = p.size();
    doc["covers"] = p.covers().size();
    doc["ranked"] = p.has_rank_function();
    if (p.has_rank_function()) doc["rank_polynomial"] = poly_json(rank_polynomial(p));
    doc["file"] = out;
    std::string text = order_kind_name(kind) + "(" + g->name() + "): " + std::to_string(p.size()) +
                       " elements, " + std::to_string(p.covers().size()) + " covers";
    if (p.has_rank_function()) text += ", rank polynomial " + poly_str(rank_polynomial(p));
    text += "\n  written to " + out + "\n";
    emit(opt, doc, text);
    return kExitHolds;
}

// ---------------------------------------------------------------- check

WeightFunction resolve_weights(const PosetFile& pf, const std::string& weights_arg) {
    if (weights_arg == "unit" || (weights_arg.empty() && !pf.weights))
        return unit_weights(pf.poset.size());
    if (weights_arg.empty()) return *pf.weights;
    auto wf = load_poset_file(weights_arg);
    if (!wf.weights) throw SchemaError("weight file " + weights_arg + " carries no `weights` field");
    if (int(wf.weights->size()) != pf.poset.size())
        throw SchemaError("weight file size does not match the poset");
    return *wf.weights;
}

int cmd_check(const std::string& file, const std::string& what, const std::string& weights_arg,
              const std::string& cert_out, const std::string& witness_out, const Options& opt) {
    PosetFile pf = load_poset_file(file);
    const RankedPoset& p = pf.poset;
    json doc;
    doc["file"] = file;
    doc["check"] = what;

    auto write_witness = [&](const std::string& textdoc) {
        if (!witness_out.empty()) write_text_file(witness_out, textdoc);
    };

    if (what == "ranked") {
        auto res = is_ranked(p);
        if (std::holds_alternative<std::vector<int>>(res)) {
            doc["ranked"] = true;
            doc["rank_polynomial"] = poly_json(rank_polynomial(p));
            emit(opt, doc, "ranked: yes, rank polynomial " + poly_str(rank_polynomial(p)) + "\n");
            return kExitHolds;
        }
        const auto& c = std::get<RankConflict>(res);
        doc["ranked"] = false;
        doc["conflict"] = {{"element", c.element},
                           {"path_short", c.path_short},
                           {"path_long", c.path_long}};
        write_witness(save_rank_conflict(c));
        emit(opt, doc,
             "ranked: no; element " + p.labels()[c.element] + " reached by cover paths of lengths " +
                 std::to_string(c.path_short.size() - 1) + " and " +
                 std::to_string(c.path_long.size() - 1) + "\n");
        return kExitRefuted;
    }

    if (what == "log-concave") {
        WeightFunction nu = resolve_weights(pf, weights_arg);
        bool ok = is_log_concave(p, nu);
        doc["log_concave"] = ok;
        if (!ok) {
            const auto& decomp = p.rank_decomposition();
            for (size_t i = 1; i + 1 < decomp.size(); ++i) {
                Rat mid = weight_of(nu, decomp[i]);
                Rat lo = weight_of(nu, decomp[i - 1]), hi = weight_of(nu, decomp[i + 1]);
                if (mid * mid < lo * hi) {
                    doc["failing_rank"] = int(i);
                    doc["nu_squared"] = rat_pair(mid * mid);
                    doc["nu_product"] = rat_pair(lo * hi);
                    break;
                }
            }
        }
        emit(opt, doc, std::string("log-concave: ") + (ok ? "yes" : "no") + "\n");
        return ok ? kExitHolds : kExitRefuted;
    }

    if (what == "flow") {
        WeightFunction nu = resolve_weights(pf, weights_arg);
        auto res = normalized_flow(p, nu);
        if (std::holds_alternative<FlowCertificate>(res)) {
            const auto& cert = std::get<FlowCertificate>(res);
            if (!verify_flow(p, nu, cert))
                throw InternalConsistencyError("emitted certificate failed re-verification");
            doc["flow"] = true;
            if (!cert_out.empty()) {
                save_certificate_file(cert_out, cert);
                doc["certificate"] = cert_out;
            }
            emit(opt, doc,
                 "normalized flow: exists" +
                     (cert_out.empty() ? std::string() : " (certificate in " + cert_out + ")") +
                     "\n");
            return kExitHolds;
        }
        const auto& fail = std::get<LayerFailure>(res);
        doc["flow"] = false;
        doc["failing_rank"] = fail.rank;
        doc["cut"] = {{"subset", fail.cut.subset},
                      {"neighborhood", fail.cut.neighborhood},
                      {"lhs", rat_pair(fail.cut.lhs)},
                      {"rhs", rat_pair(fail.cut.rhs)}};
        write_witness(save_cut_witness(fail));
        emit(opt, doc,
             "normalized flow: none; Hall violation between ranks " + std::to_string(fail.rank) +
                 " and " + std::to_string(fail.rank + 1) + " (" + rat_str(fail.cut.lhs) + " > " +
                 rat_str(fail.cut.rhs) + ")\n");
        return kExitRefuted;
    }

    if (what == "sperner") {
        auto report = sperner_report(p);
        doc["verdict"] = verdict_name(report.verdict);
        switch (report.verdict) {
            case SpernerVerdict::Positive: {
                if (!cert_out.empty()) {
                    save_certificate_file(cert_out, *report.certificate);
                    doc["certificate"] = cert_out;
                }
                emit(opt, doc, "sperner: POSITIVE (normalized flow certificate)\n");
                return kExitHolds;
            }
            case SpernerVerdict::Negative: {
                doc["antichain"] = report.antichain->elements;
                write_witness(save_antichain_witness(*report.antichain));
                emit(opt, doc,
                     "sperner: NEGATIVE; antichain of size " +
                         std::to_string(report.antichain->elements.size()) +
                         " beats every rank size\n");
                return kExitRefuted;
            }
            case SpernerVerdict::Inconclusive: {
                doc["failing_rank"] = report.failure->rank;
                doc["cut"] = {{"subset", report.failure->cut.subset},
                              {"neighborhood", report.failure->cut.neighborhood},
                              {"lhs", rat_pair(report.failure->cut.lhs)},
                              {"rhs", rat_pair(report.failure->cut.rhs)}};
                if (!report.k_family_table.empty()) {
                    json table = json::array();
                    for (auto [k, fam, bound] : report.k_family_table)
                        table.push_back({{"k", k}, {"k_family", fam}, {"rank_bound", bound}});
                    doc["k_family_table"] = std::move(table);
                }
                write_witness(save_cut_witness(*report.failure));
                emit(opt, doc, "sperner: INCONCLUSIVE (no flow, no antichain violation)\n");
                return kExitInconclusive;
            }
        }
    }
    throw ParameterError("unknown check `" + what + "` (expected flow|sperner|ranked|log-concave)");
}

// ---------------------------------------------------------------- quotient

int cmd_quotient(const std::string& spec, const std::string& kind_str, const std::string& out,
                 const std::string& orbits_out, const Options& opt) {
    auto g = parse_group_spec(spec, opt.budgets);
    RankedPoset p = build_order(*g, parse_order_kind(kind_str));
    auto partition = g->conjugacy_partition();
    auto [q, wq] = poset_quotient(p, partition);
    save_poset_file(out, q, wq);
    if (!orbits_out.empty()) {
        json orb;
        orb["orbit_of"] = partition;
        write_text_file(orbits_out, orb.dump(2) + "\n");
    }
    json doc;
    doc["group"] = g->name();
    doc["kind"] = order_kind_name(parse_order_kind(kind_str));
    doc["orbits"] = q.size();
    doc["covers"] = q.covers().size();
    doc["file"] = out;
    emit(opt, doc,
         "conjugation quotient of " + order_kind_name(parse_order_kind(kind_str)) + "(" + g->name() +
             "): " + std::to_string(q.size()) + " orbits, " + std::to_string(q.covers().size()) +
             " covers\n  written to " + out + "\n");
    return kExitHolds;
}

// ---------------------------------------------------------------- claw

int cmd_claw(const std::string& spec, const std::string& decompose, const std::string& out,
             const Options& opt) {
    auto g = parse_group_spec(spec, opt.budgets);
    auto* gm = dynamic_cast<GmpnSource*>(g.get());
    if (!gm) throw ParameterError("claw machinery needs a G(m,p,n) spec");
    const GmpnGroup& grp = gm->group();
    json doc;
    doc["group"] = g->name();

    if (grp.p() == 2 && grp.m() == 2) {
        auto part = claw_partition_search(grp);
        doc["partition_exists"] = part.has_value();
        std::string text = "claw partition of " + g->name() + ": ";
        if (part) {
            json blocks = json::array();
            text += "found, block sizes";
            for (const auto& b : *part) {
                json blk = json::array();
                for (int t : b) blk.push_back(grp.label(t));
                blocks.push_back(std::move(blk));
                text += " " + std::to_string(b.size());
            }
            doc["blocks"] = std::move(blocks);
            text += "\n";
        } else {
            text += "none (no claw-product coarsening with the exponent block sizes)\n";
        }
        emit(opt, doc, text);
        return part ? kExitHolds : kExitRefuted;
    }

    auto lab = claw_embedding(grp);
    json sizes = json::array();
    std::string text = g->name() + " coarsens to";
    bool first = true;
    for (int j = 1; j <= grp.n(); ++j) {
        sizes.push_back(lab.blocks[j - 1].size());
        if (j * grp.m() - 1 >= 1) {
            text += (first ? " C_" : " x C_") + std::to_string(j * grp.m());
            first = false;
        }
    }
    doc["block_sizes"] = std::move(sizes);
    doc["verified"] = true;
    text += " (block sizes";
    for (const auto& b : lab.blocks) text += " " + std::to_string(b.size());
    text += "), all covers verified in the absolute order\n";
    if (!decompose.empty()) {
        GmpnElement w = parse_element(decompose, grp.m());
        auto factors = claw_decompose(grp, w);
        json farr = json::array();
        text += "  " + format_element(w) + " =";
        for (const auto& f : factors) {
            farr.push_back(format_element(f));
            text += " " + format_element(f);
        }
        doc["decomposition"] = std::move(farr);
        text += "\n";
    }
    if (!out.empty()) {
        save_poset_file(out, claw_product_poset(grp, lab));
        doc["file"] = out;
        text += "  coarsening written to " + out + "\n";
    }
    emit(opt, doc, text);
    return kExitHolds;
}

// ---------------------------------------------------------------- reproduce

struct ClaimResult {
    std::string status = "PASS";  // PASS | FAIL | DEVIATION
    json detail;
    std::vector<std::string> artifacts;
};

fs::path artifact_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return fs::path(dir) / name;
}

// codim-counterexample: co(G(4,2,2)) has rank sizes (1,8,7) and a
// 9-element antichain.
ClaimResult claim_codim_counterexample(const std::string& dir, const Options& opt) {
    ClaimResult r;
    GmpnSource g(4, 2, 2, opt.budgets.elements);
    auto co = build_codim_order(g);
    auto poset_file = artifact_path(dir, "co_g422.poset.json");
    save_poset_file(poset_file.string(), co);
    r.artifacts.push_back(poset_file.string());
    auto poly = rank_polynomial(co);
    r.detail["rank_sizes"] = poly_json(poly);
    if (poly != RankPolynomial{1, 8, 7}) r.status = "FAIL";
    auto anti = max_antichain(co);
    r.detail["antichain_size"] = anti.elements.size();
    json labels = json::array();
    for (int v : anti.elements) labels.push_back(co.labels()[v]);
    r.detail["antichain"] = std::move(labels);
    if (anti.elements.size() < 9) r.status = "FAIL";
    auto witness_file = artifact_path(dir, "co_g422.antichain.json");
    write_text_file(witness_file.string(), save_antichain_witness(anti));
    r.artifacts.push_back(witness_file.string());
    // independent re-verification from disk
    auto reloaded = load_poset_file(poset_file.string());
    for (size_t i = 0; i < anti.elements.size(); ++i)
        for (size_t j = i + 1; j < anti.elements.size(); ++j)
            if (reloaded.poset.comparable(anti.elements[i], anti.elements[j])) r.status = "FAIL";
    r.detail["reverified"] = true;
    return r;
}

// codim-unranked: co(G(4,2,4)) admits no consistent rank function.
ClaimResult claim_codim_unranked(const std::string& dir, const Options& opt) {
    ClaimResult r;
    GmpnSource g(4, 2, 4, opt.budgets.elements);
    auto co = build_codim_order(g);
    auto res = is_ranked(co);
    if (!std::holds_alternative<RankConflict>(res)) {
        r.status = "FAIL";
        return r;
    }
    const auto& c = std::get<RankConflict>(res);
    auto poset_file = artifact_path(dir, "co_g424.poset.json");
    save_poset_file(poset_file.string(), co);
    r.artifacts.push_back(poset_file.string());
    auto witness_file = artifact_path(dir, "co_g424.rank-conflict.json");
    write_text_file(witness_file.string(), save_rank_conflict(c));
    r.artifacts.push_back(witness_file.string());
    r.detail["conflict_element"] = co.labels()[c.element];
    r.detail["path_lengths"] = json::array({c.path_short.size() - 1, c.path_long.size() - 1});
    // re-verify the two cover paths against the reloaded poset
    auto reloaded = load_poset_file(poset_file.string());
    std::set<std::pair<int, int>> covers(reloaded.poset.covers().begin(),
                                         reloaded.poset.covers().end());
    auto path_ok = [&](const std::vector<int>& path) {
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!covers.count({path[i], path[i + 1]})) return false;
        return !path.empty() && path.back() == c.element;
    };
    if (!path_ok(c.path_short) || !path_ok(c.path_long) || c.path_short.size() == c.path_long.size())
        r.status = "FAIL";
    r.detail["reverified"] = true;
    return r;
}

// prefix-counterexample: pre(G(10,5,3)) structure and the 12th power.
ClaimResult claim_prefix_counterexample(const std::string& dir, const Options& opt) {
    ClaimResult r;
    GmpnSource g(10, 5, 3, opt.budgets.elements);
    auto pre = build_prefix_order(g);
    auto poset_file = artifact_path(dir, "pre_g1053.poset.json");
    save_poset_file(poset_file.string(), pre);
    r.artifacts.push_back(poset_file.string());

    auto poly = rank_polynomial(pre);
    RankPolynomial printed{1, 33, 287, 519, 314, 48};
    r.detail["computed_polynomial"] = poly_json(poly);
    r.detail["paper_polynomial"] = poly_json(printed);
    r.detail["computed_sum"] = poly_sum(poly).get_str();
    bool deviates = poly != printed;
    if (deviates) {
        json diffs = json::array();
        for (size_t i = 0; i < std::max(poly.size(), printed.size()); ++i) {
            Int a = i < poly.size() ? poly[i] : Int(0);
            Int b = i < printed.size() ? printed[i] : Int(0);
            if (a != b)
                diffs.push_back({{"power", i}, {"computed", a.get_str()}, {"paper", b.get_str()}});
        }
        r.detail["coefficient_deviations"] = std::move(diffs);
    }
    if (poly_sum(poly) != 1200) r.status = "FAIL";
    if (pre.max_rank() != 5) r.status = "FAIL";

    int low_max = -1;
    for (int v = 0; v < pre.size(); ++v)
        if (pre.up()[v].empty() && pre.rank_of(v) < pre.max_rank())
            if (low_max < 0 || pre.rank_of(v) < pre.rank_of(low_max)) low_max = v;
    if (low_max < 0) {
        r.status = "FAIL";
        return r;
    }
    r.detail["maximal_element"] = pre.labels()[low_max];
    r.detail["maximal_element_rank"] = pre.rank_of(low_max);
    if (pre.rank_of(low_max) != 3) r.status = "FAIL";

    auto power = poly_pow(poly, 12);
    int argmax = poly_argmax(power);
    r.detail["argmax_of_12th_power"] = argmax;
    r.detail["paper_argmax"] = 37;
    r.detail["sperner_violated_in_power"] = argmax > 12 * pre.rank_of(low_max);
    if (argmax <= 12 * pre.rank_of(low_max)) r.status = "FAIL";
    if (argmax != 37) r.detail["argmax_deviation"] = true;

    if (r.status == "PASS" && deviates) r.status = "DEVIATION";
    return r;
}

// dihedral-flows: complete bipartite Hasse diagrams and flows, m = 3..8.
ClaimResult claim_dihedral_flows(const std::string& dir, const Options& opt) {
    ClaimResult r;
    json per_m = json::array();
    for (int m = 3; m <= 8; ++m) {
        GmpnSource g(m, m, 2, opt.budgets.elements);
        auto abs = build_absolute_order(g);
        const auto& decomp = abs.rank_decomposition();
        bool bipartite_ok = abs.covers().size() == size_t(m) + size_t(m) * (m - 1);
        auto res = normalized_flow(abs, unit_weights(abs.size()));
        bool flow_ok = std::holds_alternative<FlowCertificate>(res);
        if (flow_ok) {
            std::string stem = "abs_g" + std::to_string(m) + std::to_string(m) + "2";
            auto f = artifact_path(dir, stem + ".cert.json");
            save_certificate_file(f.string(), std::get<FlowCertificate>(res));
            r.artifacts.push_back(f.string());
            auto p_file = artifact_path(dir, stem + ".poset.json");
            save_poset_file(p_file.string(), abs);
            r.artifacts.push_back(p_file.string());
            // independent re-verification from disk
            auto rp = load_poset_file(p_file.string());
            auto rc = load_certificate_file(f.string());
            if (!verify_flow(rp.poset, unit_weights(rp.poset.size()), rc)) flow_ok = false;
        }
        per_m.push_back(
            {{"m", m},
             {"rank_sizes", json::array({decomp[0].size(), decomp[1].size(), decomp[2].size()})},
             {"complete_bipartite", bipartite_ok},
             {"flow", flow_ok}});
        if (!bipartite_ok || !flow_ok) r.status = "FAIL";
    }
    r.detail["dihedral"] = std::move(per_m);
    return r;
}

// gm1n-claw: claw embeddings, rank polynomials and flows for G(m,1,n).
ClaimResult claim_gm1n_claw(const std::string& dir, const Options& opt) {
    ClaimResult r;
    json cases = json::array();
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
        GmpnSource g(m, 1, n, opt.budgets.elements);
        claw_embedding(g.group());  // raises on any verification failure
        auto abs = build_absolute_order(g);
        RankPolynomial expected{1};
        for (int j = 1; j <= n; ++j)
            if (j * m - 1 >= 1) expected = poly_mul(expected, {1, Int(j * m - 1)});
        bool poly_ok = rank_polynomial(abs) == expected;
        auto res = normalized_flow(abs, unit_weights(abs.size()));
        bool flow_ok = std::holds_alternative<FlowCertificate>(res);
        if (flow_ok) {
            std::string stem = "abs_g" + std::to_string(m) + "1" + std::to_string(n);
            auto f = artifact_path(dir, stem + ".cert.json");
            save_certificate_file(f.string(), std::get<FlowCertificate>(res));
            r.artifacts.push_back(f.string());
            auto pfile = artifact_path(dir, stem + ".poset.json");
            save_poset_file(pfile.string(), abs);
            r.artifacts.push_back(pfile.string());
            auto rp = load_poset_file(pfile.string());
            auto rc = load_certificate_file(f.string());
            if (!verify_flow(rp.poset, unit_weights(rp.poset.size()), rc)) flow_ok = false;
        }
        cases.push_back({{"group", g.name()},
                         {"claw_verified", true},
                         {"rank_polynomial_matches", poly_ok},
                         {"flow", flow_ok}});
        if (!poly_ok || !flow_ok) r.status = "FAIL";
    }
    r.detail["cases"] = std::move(cases);
    return r;
}

// exceptional-flows: conjugation quotients of abs(H3), abs(F4) (H4/E6
// behind --big) carry normalized flows with nu(O)=|O| that lift and
// re-verify on the full poset.
ClaimResult claim_exceptional_flows(const std::string& dir, const Options& opt) {
    ClaimResult r;
    std::vector<CoxeterType> types{CoxeterType::H3, CoxeterType::F4};
    if (opt.big) {
        types.push_back(CoxeterType::H4);
        types.push_back(CoxeterType::E6);
    }
    json cases = json::array();
    for (CoxeterType t : types) {
        CoxeterSource g(t, opt.big ? 600.0 : opt.budgets.seconds);
        auto abs = build_prefix_order(g);
        auto partition = g.conjugacy_partition();
        auto [q, wq] = poset_quotient(abs, partition);
        auto qres = normalized_flow(q, wq);
        bool ok = std::holds_alternative<FlowCertificate>(qres);
        if (ok) {
            auto qp = artifact_path(dir, "abs_" + g.name() + ".quotient.poset.json");
            save_poset_file(qp.string(), q, wq);
            r.artifacts.push_back(qp.string());
            auto qc = artifact_path(dir, "abs_" + g.name() + ".quotient.cert.json");
            save_certificate_file(qc.string(), std::get<FlowCertificate>(qres));
            r.artifacts.push_back(qc.string());
            // reload, re-verify, then lift to the full poset
            auto rq = load_poset_file(qp.string());
            auto rcert = load_certificate_file(qc.string());
            if (!rq.weights || !verify_flow(rq.poset, *rq.weights, rcert)) ok = false;
            if (ok) {
                auto lifted = lift_flow_from_quotient(abs, partition, rcert);
                auto lc = artifact_path(dir, "abs_" + g.name() + ".lifted.cert.json");
                save_certificate_file(lc.string(), lifted);
                r.artifacts.push_back(lc.string());
                auto rl = load_certificate_file(lc.string());
                if (!verify_flow(abs, unit_weights(abs.size()), rl)) ok = false;
            }
        }
        cases.push_back(
            {{"group", g.name()}, {"orbits", q.size()}, {"quotient_flow_lifted_verified", ok}});
        if (!ok) r.status = "FAIL";
    }
    if (!opt.big) r.detail["note"] = "h4 and e6 run behind --big";
    r.detail["cases"] = std::move(cases);
    return r;
}

// type-d-conjecture: quotient flows for abs(G(2,2,n)), plus the claw
// partition nonexistence for n = 4, 5.
ClaimResult claim_type_d(const std::string& dir, const Options& opt, int n_override) {
    ClaimResult r;
    std::vector<int> ns{4, 5};
    if (opt.big) ns.push_back(6);
    if (n_override > 0) {
        if (n_override >= 6 && !opt.big)
            throw ParameterError("n = " + std::to_string(n_override) + " needs --big");
        ns = {n_override};
    }
    json cases = json::array();
    for (int n : ns) {
        GmpnSource g(2, 2, n, opt.budgets.elements);
        auto abs = build_absolute_order(g);
        auto partition = g.conjugacy_partition();
        auto [q, wq] = poset_quotient(abs, partition);
        auto qres = normalized_flow(q, wq);
        bool flow_ok = std::holds_alternative<FlowCertificate>(qres);
        if (flow_ok) {
            std::string stem = "abs_d" + std::to_string(n);
            auto qp = artifact_path(dir, stem + ".quotient.poset.json");
            save_poset_file(qp.string(), q, wq);
            r.artifacts.push_back(qp.string());
            auto qc = artifact_path(dir, stem + ".quotient.cert.json");
            save_certificate_file(qc.string(), std::get<FlowCertificate>(qres));
            r.artifacts.push_back(qc.string());
            auto rcert = load_certificate_file(qc.string());
            auto lifted = lift_flow_from_quotient(abs, partition, rcert);
            if (abs.covers().size() <= 2000000) {
                auto lc = artifact_path(dir, stem + ".lifted.cert.json");
                save_certificate_file(lc.string(), lifted);
                r.artifacts.push_back(lc.string());
                auto rl = load_certificate_file(lc.string());
                if (!verify_flow(abs, unit_weights(abs.size()), rl)) flow_ok = false;
            } else {
                // n >= 7: the lifted certificate runs to hundreds of MB;
                // verify in memory and keep the quotient certificate as
                // the on-disk artifact
                if (!verify_flow(abs, unit_weights(abs.size()), lifted)) flow_ok = false;
            }
        }
        json entry = {{"n", n}, {"flow_lifted_verified", flow_ok}};
        if (n == 4 || n == 5) {
            bool none = !claw_partition_search(g.group()).has_value();
            entry["claw_partition_none"] = none;
            if (!none) r.status = "FAIL";
        }
        cases.push_back(std::move(entry));
        if (!flow_ok) r.status = "FAIL";
    }
    r.detail["cases"] = std::move(cases);
    return r;
}

int cmd_reproduce(const std::string& claim, const std::string& dir, int n_override,
                  const Options& opt) {
    struct Entry {
        const char* name;
        std::function<ClaimResult()> run;
    };
    std::vector<Entry> entries{
        {"codim-counterexample", [&] { return claim_codim_counterexample(dir, opt); }},
        {"codim-unranked", [&] { return claim_codim_unranked(dir, opt); }},
        {"prefix-counterexample", [&] { return claim_prefix_counterexample(dir, opt); }},
        {"dihedral-flows", [&] { return claim_dihedral_flows(dir, opt); }},
        {"gm1n-claw", [&] { return claim_gm1n_claw(dir, opt); }},
        {"exceptional-flows", [&] { return claim_exceptional_flows(dir, opt); }},
        {"type-d-conjecture", [&] { return claim_type_d(dir, opt, n_override); }},
    };
    json results = json::array();
    std::string text;
    bool any_fail = false;
    bool matched = false;
    for (const auto& e : entries) {
        if (claim != "all" && claim != e.name) continue;
        matched = true;
        ClaimResult res = e.run();
        any_fail = any_fail || res.status == "FAIL";
        json doc;
        doc["claim"] = e.name;
        doc["status"] = res.status;
        doc["detail"] = res.detail;
        doc["artifacts"] = res.artifacts;
        results.push_back(std::move(doc));
        text += res.status + " " + e.name + "\n";
        if (res.status == "DEVIATION")
            text += "  (structural claims hold; a printed coefficient deviates, see --json)\n";
    }
    if (!matched)
        throw ParameterError(
            "unknown claim `" + claim +
            "` (expected codim-counterexample|codim-unranked|prefix-counterexample|dihedral-flows|"
            "gm1n-claw|exceptional-flows|type-d-conjecture|all)");
    emit(opt, results, text);
    return any_fail ? kExitRefuted : kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orders on complex reflection groups, normalized flows, Sperner certificates"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after subcommand arguments
    Options opt;
    opt.budgets = budgets_from_env();

    app.add_flag("--json", opt.json, "structured output");
    app.add_flag("--big", opt.big, "enable the long-running computations (h4, e6, D_6 and up)");
    app.add_option("--element-budget", opt.budgets.elements, "group enumeration budget");
    app.add_option("--time-budget", opt.budgets.seconds, "group build time budget in seconds");

    auto* group = app.add_subcommand("group", "group inspection");
    std::string spec;
    auto* info = group->add_subcommand("info", "order, reflections, exponents");
    info->add_option("spec", spec, "g(m,p,n) | h3 | f4 | h4 | e6")->required();

    auto* order = app.add_subcommand("order", "order construction");
    auto* build = order->add_subcommand("build", "build an order and write the poset file");
    std::string kind = "prefix", out_file;
    build->add_option("--group", spec, "group spec")->required();
    build->add_option("--kind", kind, "prefix|codim|abs");
    build->add_option("--out", out_file, "output poset file")->required();

    auto* check = app.add_subcommand("check", "verify a property of a poset file");
    std::string check_file, check_what, weights_arg, cert_out, witness_out;
    check->add_option("file", check_file, "poset file")->required();
    check->add_option("--check", check_what, "flow|sperner|ranked|log-concave")->required();
    check->add_option("--weights", weights_arg, "unit | poset file carrying weights");
    check->add_option("--cert-out", cert_out, "write the certificate here");
    check->add_option("--witness-out", witness_out, "write the refutation witness here");

    auto* quot = app.add_subcommand("quotient", "conjugation quotient of an order");
    std::string quot_kind = "abs", orbit_out;
    quot->add_option("--group", spec, "group spec")->required();
    quot->add_option("--kind", quot_kind, "prefix|codim|abs");
    quot->add_option("--out", out_file, "output poset file (weights = orbit sizes)")->required();
    quot->add_option("--orbits-out", orbit_out, "write the orbit partition here");

    auto* clawcmd = app.add_subcommand("claw", "claw coarsening machinery");
    std::string decompose;
    clawcmd->add_option("--group", spec, "g(m,1,n) for the embedding, g(2,2,n) for the search")
        ->required();
    clawcmd->add_option("--decompose", decompose, "element to factor, e.g. [1,0|2,1]");
    clawcmd->add_option("--out", out_file, "write the coarsening poset here");

    auto* rep = app.add_subcommand("reproduce", "reproduction harness for the numbered claims");
    std::string claim;
    int n_override = 0;
    std::string out_dir = "artifacts";
    rep->add_option("claim", claim,
                    "codim-counterexample|codim-unranked|prefix-counterexample|dihedral-flows|"
                    "gm1n-claw|exceptional-flows|type-d-conjecture|all")
        ->required();
    rep->add_option("--n", n_override, "restrict type-d-conjecture to one n");
    rep->add_option("--out-dir", out_dir, "artifact directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_group_info(spec, opt);
        if (build->parsed()) return cmd_order_build(spec, kind, out_file, opt);
        if (check->parsed())
            return cmd_check(check_file, check_what, weights_arg, cert_out, witness_out, opt);
        if (quot->parsed()) return cmd_quotient(spec, quot_kind, out_file, orbit_out, opt);
        if (clawcmd->parsed()) return cmd_claw(spec, decompose, out_file, opt);
        if (rep->parsed()) return cmd_reproduce(claim, out_dir, n_override, opt);
        std::cerr << "error: no subcommand\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
