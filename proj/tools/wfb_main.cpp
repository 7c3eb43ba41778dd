#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfb/classify.hpp"
#include "wfb/cohom.hpp"
#include "wfb/dsl.hpp"
#include "wfb/k3.hpp"
#include "wfb/quiver.hpp"
#include "wfb/resolutions.hpp"
#include "wfb/suites.hpp"
#include "wfb/taut.hpp"

namespace {

using nlohmann::ordered_json;

// exit codes: 0 pass, 1 check failure, 2 usage error, 3 internal invariant violation
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

ordered_json candidate_json(const wfb::CandidatePair& c) {
    ordered_json j;
    j["c1"] = c.c1;
    j["c2"] = c.c2;
    switch (c.verdict) {
        case wfb::CandidatePair::Verdict::StableCandidate:
            j["verdict"] = "stable-candidate";
            j["label"] = c.label;
            break;
        case wfb::CandidatePair::Verdict::SplitType: {
            j["verdict"] = "split";
            ordered_json arr = ordered_json::array();
            for (const auto& s : c.splits) {
                ordered_json js;
                js["a"] = s.a;
                js["b"] = s.b;
                js["flag"] = wfb::to_string(s.flag);
                arr.push_back(js);
            }
            j["splits"] = arr;
            break;
        }
        case wfb::CandidatePair::Verdict::Excluded:
            j["verdict"] = "excluded";
            j["reason"] = c.reason;
            j["rule_kind"] = c.cited_rule ? "cited-geometric" : "arithmetic";
            break;
    }
    if (c.fano_flag) j["fano"] = wfb::to_string(*c.fano_flag);
    return j;
}

std::string candidate_text(const wfb::CandidatePair& c) {
    std::ostringstream os;
    os << "(" << c.c1 << "," << c.c2 << ")  ";
    switch (c.verdict) {
        case wfb::CandidatePair::Verdict::StableCandidate:
            os << "stable candidate: " << c.label;
            break;
        case wfb::CandidatePair::Verdict::SplitType:
            for (const auto& s : c.splits)
                os << "splits as O(" << s.a << ") + O(" << s.b << ") [" << wfb::to_string(s.flag)
                   << "]";
            break;
        case wfb::CandidatePair::Verdict::Excluded:
            os << "excluded" << (c.cited_rule ? " (cited rule)" : "") << ": " << c.reason;
            break;
    }
    if (c.fano_flag && c.verdict == wfb::CandidatePair::Verdict::StableCandidate)
        os << " [" << wfb::to_string(*c.fano_flag) << "]";
    return os.str();
}

wfb::LatticeClass parse_class(const std::string& text) {
    wfb::LatticeClass out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw wfb::DomainError("bad coordinate '" + item + "' in class " + text);
        }
    }
    if (out.empty()) throw wfb::DomainError("empty lattice class");
    return out;
}

wfb::LatticeModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wfb::DomainError("cannot open model file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.contains("gram")) throw wfb::DomainError("model JSON needs a \"gram\" matrix");
    std::vector<std::vector<long long>> gram;
    for (const auto& row : j["gram"]) gram.push_back(row.get<std::vector<long long>>());
    std::vector<wfb::LatticeClass> curves;
    if (j.contains("curves"))
        for (const auto& c : j["curves"]) curves.push_back(c.get<wfb::LatticeClass>());
    return wfb::LatticeModel(gram, curves);
}

ordered_json graded_json(const wfb::GradedDim& g) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= std::max(g.max_degree(), 0); ++i) arr.push_back(g.at(i));
    if (g.is_zero()) arr = ordered_json::array({0});
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wfb: exact-arithmetic verification of the numerical classification of "
                 "rank-2 weak Fano bundles on Fano threefolds of Picard rank one"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit machine-readable JSON");

    // ---- classify ----------------------------------------------------
    auto* classify = app.add_subcommand("classify", "classification tables");
    classify->require_subcommand(1);
    auto* classify_q3 = classify->add_subcommand("q3", "normalized verdict table on the quadric threefold");
    long long c2_min = -8, c2_max = 6;
    classify_q3->add_option("--c2-min", c2_min, "lower end of the c2 window");
    classify_q3->add_option("--c2-max", c2_max, "upper end of the c2 window");
    auto* classify_i1 = classify->add_subcommand("index1", "admissible c2 table on index-one threefolds");
    int only_genus = 0;
    classify_i1->add_option("--genus", only_genus, "restrict to one genus");

    // ---- intersect ---------------------------------------------------
    auto* intersect = app.add_subcommand("intersect", "evaluate a degree-4 intersection expression");
    std::string expr_text, space = "q3";
    int genus = 0;
    long long opt_c1 = 0, opt_c2 = 0;
    bool has_c1 = false, has_c2 = false;
    intersect->add_option("expr", expr_text, "expression in xi, H, K")->required();
    intersect->add_option("--space", space, "q3 or index1")->check(CLI::IsMember({"q3", "index1"}));
    intersect->add_option("--genus", genus, "genus for --space index1");
    intersect->add_option("--c1", opt_c1, "c1 of the bundle (H units)");
    intersect->add_option("--c2", opt_c2, "c2 of the bundle (line units)");

    // ---- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    std::string seq_file;
    verify->add_option("suite", suite_name, "suite name or 'all'")->required();
    verify->add_option("--sequence", seq_file,
                       "also check a sequence given as JSON {\"terms\":[{\"mult\":..,\"symbol\":..},..]}");

    // ---- k3 ------------------------------------------------------------
    auto* k3 = app.add_subcommand("k3", "Picard-lattice arithmetic");
    k3->require_subcommand(1);
    std::string model_file, divisor_text, x_text, y_text;
    long long bound = 100, dmax = 7, m1 = 1, k3_degree = 0;
    int k3_genus = 9;
    auto* k3_minus2 = k3->add_subcommand("minus-two", "classes of square -2");
    k3_minus2->add_option("--model", model_file, "lattice JSON {\"gram\":[[..]],\"curves\":[[..]]}")
        ->required();
    k3_minus2->add_option("--bound", bound, "coordinate box bound");
    auto* k3_nef = k3->add_subcommand("nef", "nef decomposition D = P + sum of (-2)-curves");
    k3_nef->add_option("--model", model_file, "lattice JSON with curve list")->required();
    k3_nef->add_option("--divisor", divisor_text, "comma-separated coordinates")->required();
    auto* k3_iso = k3->add_subcommand("isotropic", "E^2 = 0, H.E = d on the genus-g conic lattice");
    k3_iso->add_option("--genus", k3_genus, "genus, 9..12")->required();
    k3_iso->add_option("--dmax", dmax, "largest degree to scan");
    auto* k3_step4 = k3->add_subcommand("step4", "feasibility of the (g,d,m1) inequality chain");
    k3_step4->add_option("--genus", k3_genus)->required();
    k3_step4->add_option("--degree", k3_degree)->required();
    k3_step4->add_option("--m1", m1)->required();
    auto* k3_pair = k3->add_subcommand("pairing", "Gram pairing of two classes");
    k3_pair->add_option("--model", model_file)->required();
    k3_pair->add_option("--x", x_text)->required();
    k3_pair->add_option("--y", y_text)->required();

    // ---- quiver ----------------------------------------------------------
    auto* quiver = app.add_subcommand("quiver", "5-Kronecker quiver numerics");
    quiver->require_subcommand(1);
    int arrows = 5;
    std::string dim_text = "7,2", w_text;
    quiver->add_option("--arrows", arrows, "number of arrows");
    auto* quiver_dim = quiver->add_subcommand("dim", "moduli dimension 1 - <v,v>");
    quiver_dim->add_option("--dimvector", dim_text, "dimension vector a,b");
    auto* quiver_theta = quiver->add_subcommand("theta", "stability weight 7b - 2a");
    quiver_theta->add_option("--dimvector", dim_text);
    auto* quiver_dest = quiver->add_subcommand("destabilizers", "candidate destabilizing subvectors");
    quiver_dest->add_option("--dimvector", dim_text);
    auto* quiver_euler = quiver->add_subcommand("euler", "Ringel form <v,w>");
    quiver_euler->add_option("--dimvector", dim_text);
    quiver_euler->add_option("--w", w_text, "second dimension vector (defaults to v)");

    // ---- cohom -----------------------------------------------------------
    auto* cohom = app.add_subcommand("cohom", "closed-form cohomology tables");
    cohom->require_subcommand(1);
    int cn = 4, cp = 1, ca = 4, cs = 0;
    long long ck = 0;
    auto* cohom_pn = cohom->add_subcommand("pn", "O(k) on P^n");
    cohom_pn->add_option("--n", cn)->required();
    cohom_pn->add_option("--k", ck)->required();
    auto* cohom_omega = cohom->add_subcommand("omega", "Omega^p(k) on P^n (Bott)");
    cohom_omega->add_option("--n", cn)->required();
    cohom_omega->add_option("--p", cp)->required();
    cohom_omega->add_option("--k", ck)->required();
    auto* cohom_q3 = cohom->add_subcommand("q3", "O(k) on the quadric threefold");
    cohom_q3->add_option("--k", ck)->required();
    auto* cohom_spinor = cohom->add_subcommand("spinor", "spinor twist S(n), n in [-4,4]");
    cohom_spinor->add_option("--n", cs)->required();
    auto* cohom_flag = cohom->add_subcommand("flag", "3L1 - aL2 on Fl(5;2,1), a in [1,5]");
    cohom_flag->add_option("--a", ca)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (classify_q3->parsed()) {
            auto cands = wfb::q3_candidates();
            auto table = wfb::q3_table(c2_min, c2_max);
            if (json_out) {
                ordered_json j;
                j["candidates"] = ordered_json::array();
                for (const auto& c : cands) j["candidates"].push_back(candidate_json(c));
                j["table"] = ordered_json::array();
                for (const auto& c : table) j["table"].push_back(candidate_json(c));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "indecomposable stable candidates:\n";
                for (const auto& c : cands) std::cout << "  " << candidate_text(c) << "\n";
                std::cout << "verdict table, c2 in [" << c2_min << "," << c2_max << "]:\n";
                for (const auto& c : table) std::cout << "  " << candidate_text(c) << "\n";
            }
            return kExitPass;
        }
        if (classify_i1->parsed()) {
            std::vector<int> gs;
            if (only_genus) gs.push_back(only_genus);
            else gs = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
            ordered_json j = ordered_json::array();
            for (int g : gs) {
                wfb::Index1Range range = wfb::index1_c2_range(g);
                if (json_out) {
                    ordered_json jr;
                    jr["g"] = g;
                    jr["lo"] = range.lo;
                    jr["hi"] = range.hi;
                    jr["empty"] = range.empty;
                    jr["rows"] = ordered_json::array();
                    for (const auto& row : range.rows) {
                        ordered_json rr;
                        rr["d"] = row.d;
                        rr["s3"] = row.s3;
                        rr["h0"] = row.h0;
                        jr["rows"].push_back(rr);
                    }
                    j.push_back(jr);
                } else {
                    std::cout << "g = " << g << ": ";
                    if (range.empty) {
                        std::cout << "no indecomposable bundles (interval [" << range.lo << ","
                                  << range.hi << "] empty)\n";
                    } else {
                        std::cout << "d in [" << range.lo << "," << range.hi << "]\n";
                        for (const auto& row : range.rows)
                            std::cout << "    d = " << row.d << ": s3 = " << row.s3
                                      << ", h0 = " << row.h0 << "\n";
                    }
                }
            }
            if (json_out) std::cout << j.dump(2) << "\n";
            return kExitPass;
        }
        if (intersect->parsed()) {
            wfb::FanoModel model = wfb::FanoModel::q3();
            if (space == "index1") {
                if (genus < 2) throw wfb::DomainError("--space index1 needs --genus >= 2");
                model = wfb::FanoModel::index1(genus);
            }
            has_c1 = intersect->count("--c1") > 0;
            has_c2 = intersect->count("--c2") > 0;
            wfb::dsl::EvalContext ctx{model, std::nullopt, std::nullopt};
            if (has_c1) ctx.e1 = opt_c1;
            if (has_c2) ctx.e2 = opt_c2;
            wfb::dsl::ExprPtr e = wfb::dsl::parse(expr_text);
            wfb::Rat v = wfb::dsl::eval_intersection(e, ctx);
            if (json_out) {
                ordered_json j;
                j["expr"] = wfb::dsl::print(e);
                j["value"] = v.str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << v.str() << "\n";
            }
            return kExitPass;
        }
        if (verify->parsed()) {
            std::vector<wfb::SuiteResult> results;
            if (suite_name == "all") {
                for (const auto& n : wfb::suite_names()) results.push_back(wfb::run_suite(n));
            } else {
                results.push_back(wfb::run_suite(suite_name));
            }
            if (!seq_file.empty()) {
                std::ifstream in(seq_file);
                if (!in) throw wfb::DomainError("cannot open sequence file: " + seq_file);
                std::stringstream ss;
                ss << in.rdbuf();
                wfb::Sequence seq = wfb::parse_sequence_json(ss.str());
                wfb::ExactnessReport rep = wfb::check_exact(seq);
                wfb::SuiteResult extra{"user-sequence", {}};
                extra.checks.push_back({"residue", seq.str(), "K-theory exactness check",
                                        rep.residue.str(), "(0, 0, 0, 0)", rep.exact});
                results.push_back(extra);
            }
            bool all_pass = true;
            if (json_out) {
                std::cout << "[\n";
                for (size_t i = 0; i < results.size(); ++i) {
                    std::string s = wfb::suite_to_json(results[i]);
                    std::istringstream is(s);
                    std::string line;
                    while (std::getline(is, line)) std::cout << "  " << line << "\n";
                    if (i + 1 < results.size()) std::cout << ",";
                }
                std::cout << "]\n";
            }
            for (const auto& r : results) {
                if (!json_out) std::cout << wfb::suite_to_text(r);
                all_pass = all_pass && r.pass();
            }
            return all_pass ? kExitPass : kExitCheckFailure;
        }
        if (k3_minus2->parsed()) {
            wfb::MinusTwoResult res = wfb::minus_two_solutions(load_model(model_file), bound);
            ordered_json j;
            j["classes"] = ordered_json::array();
            for (const auto& c : res.classes) j["classes"].push_back(c);
            j["certified_complete"] = res.certified_complete;
            j["certificate"] = res.certificate;
            if (json_out) std::cout << j.dump(2) << "\n";
            else {
                std::cout << res.classes.size() << " classes of square -2 ("
                          << (res.certified_complete ? "certified complete" : "box search") << ")\n"
                          << "  " << res.certificate << "\n";
                for (const auto& c : res.classes) {
                    std::cout << "  (";
                    for (size_t i = 0; i < c.size(); ++i)
                        std::cout << (i ? "," : "") << c[i];
                    std::cout << ")\n";
                }
            }
            return kExitPass;
        }
        if (k3_nef->parsed()) {
            wfb::LatticeModel m = load_model(model_file);
            wfb::NefDecomposition d = wfb::nef_decompose(m, parse_class(divisor_text));
            if (json_out) {
                ordered_json j;
                j["nef_part"] = d.nef_part;
                j["chain"] = ordered_json::array();
                for (const auto& step : d.chain) {
                    ordered_json js = ordered_json::array();
                    for (const auto& c : step) js.push_back(c);
                    j["chain"].push_back(js);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                auto class_str = [](const wfb::LatticeClass& c) {
                    std::string s = "(";
                    for (size_t i = 0; i < c.size(); ++i)
                        s += (i ? "," : "") + std::to_string(c[i]);
                    return s + ")";
                };
                std::cout << "nef part P = " << class_str(d.nef_part) << "\n";
                if (d.chain.empty()) std::cout << "chain: empty (D already nef)\n";
                for (size_t i = 0; i < d.chain.size(); ++i) {
                    std::cout << "step " << i + 1 << ": subtract";
                    for (const auto& c : d.chain[i]) std::cout << " " << class_str(c);
                    std::cout << "\n";
                }
            }
            return kExitPass;
        }
        if (k3_iso->parsed()) {
            wfb::IsotropicReport rep = wfb::isotropic_degree_solutions(k3_genus, dmax);
            if (json_out) {
                ordered_json j;
                j["g"] = rep.g;
                j["dmax"] = rep.dmax;
                j["g_is_square"] = rep.g_is_square;
                j["note"] = rep.note;
                j["solutions"] = ordered_json::array();
                for (const auto& s : rep.solutions) {
                    ordered_json js;
                    js["d"] = s.d;
                    js["a"] = s.a;
                    js["b"] = s.b;
                    j["solutions"].push_back(js);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rep.note << "\n";
                if (rep.solutions.empty())
                    std::cout << "no solutions with 1 <= d <= " << rep.dmax << "\n";
                for (const auto& s : rep.solutions)
                    std::cout << "d = " << s.d << ": E = " << s.a << "H + " << s.b << "*gamma\n";
            }
            return kExitPass;
        }
        if (k3_step4->parsed()) {
            wfb::Step4Report rep = wfb::step4_case_analysis(k3_genus, k3_degree, m1);
            if (json_out) {
                ordered_json j;
                j["g"] = rep.g;
                j["d"] = rep.d;
                j["m1"] = rep.m1;
                j["product_lower"] = rep.product_lower;
                j["bn_upper_strict"] = rep.bn_upper;
                j["feasible"] = rep.feasible;
                j["vacuous"] = rep.vacuous;
                std::cout << j.dump(2) << "\n";
            } else if (rep.vacuous) {
                std::cout << "m1 = 0: vacuously feasible, no contradiction sought\n";
            } else {
                std::cout << "(2m1+2)(1+g-d) = " << rep.product_lower << " vs g+1 = "
                          << rep.bn_upper << ": " << (rep.feasible ? "feasible" : "infeasible")
                          << "\n";
            }
            return kExitPass;
        }
        if (k3_pair->parsed()) {
            wfb::LatticeModel m = load_model(model_file);
            std::cout << wfb::pairing(m, parse_class(x_text), parse_class(y_text)) << "\n";
            return kExitPass;
        }
        if (quiver->parsed()) {
            wfb::KroneckerModel q(arrows);
            wfb::LatticeClass v = parse_class(dim_text);
            if (v.size() != 2 || v[0] < 0 || v[1] < 0)
                throw wfb::DomainError("dimension vector needs two non-negative components");
            wfb::DimVector dv{v[0], v[1]};
            if (quiver_dim->parsed()) std::cout << wfb::moduli_dim(q, dv) << "\n";
            else if (quiver_theta->parsed()) std::cout << wfb::theta(dv) << "\n";
            else if (quiver_euler->parsed()) {
                wfb::DimVector w = dv;
                if (!w_text.empty()) {
                    wfb::LatticeClass wv = parse_class(w_text);
                    if (wv.size() != 2) throw wfb::DomainError("dimension vector needs two components");
                    w = {wv[0], wv[1]};
                }
                std::cout << wfb::euler_form(q, dv, w) << "\n";
            } else if (quiver_dest->parsed()) {
                auto cands = wfb::destabilizer_candidates(dv);
                ordered_json j = ordered_json::array();
                for (const auto& c : cands) j.push_back({c.a, c.b});
                std::cout << j.dump() << "\n";
            }
            return kExitPass;
        }
        if (cohom->parsed()) {
            wfb::GradedDim g;
            if (cohom_pn->parsed()) g = wfb::h_pn_line(cn, ck);
            else if (cohom_omega->parsed()) g = wfb::h_pn_omega(cn, cp, ck);
            else if (cohom_q3->parsed()) g = wfb::h_q3_line(ck);
            else if (cohom_spinor->parsed()) g = wfb::rgamma_spinor_twist(cs);
            else if (cohom_flag->parsed()) g = wfb::flag_rgamma(ca);
            if (json_out) {
                ordered_json j;
                j["dims"] = graded_json(g);
                j["euler"] = g.euler();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << g.str() << "  (euler " << g.euler() << ")\n";
            }
            return kExitPass;
        }
    } catch (const wfb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wfb::HypothesisViolation& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const wfb::BudgetExceeded& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const wfb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wfb::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
