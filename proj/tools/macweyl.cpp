#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macweyl/macweyl.hpp"

using namespace macweyl;

namespace {

Weight parse_lambda(const RootDatum& D, const std::string& s) {
    std::vector<int> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stoi(item));
    if (static_cast<int>(c.size()) != D.rank())
        throw std::invalid_argument("--lambda needs " + std::to_string(D.rank()) +
                                    " comma-separated integers for " + D.describe());
    return Weight(LatticeTag::X, c);
}

int parse_sigma(const RootDatum& D, const std::string& s) {
    if (s.empty() || s == "id") return D.weyl().id;
    if (s == "w0") return D.weyl().w0;
    int g = D.weyl().id;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 's' || pos + 1 >= s.size() || !isdigit(s[pos + 1]))
            throw std::invalid_argument("--sigma must be 'id', 'w0' or a word like s1s2");
        int i = s[pos + 1] - '0';
        if (i < 1 || i > D.rank())
            throw std::invalid_argument("--sigma letter out of range: s" + std::to_string(i));
        g = D.weyl().mult(g, D.weyl().gen(i));
        pos += 2;
    }
    return g;
}

struct Common {
    std::string type = "A1";
    std::string affinization = "u";
    std::string out = "text";

    const RootDatum& datum() const {
        return RootDatum::get(cartan_type_from_string(type),
                              affinization_from_string(affinization));
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--type", c.type, "Cartan type: A1 A2 A3 C2 G2")->capture_default_str();
    cmd->add_option("--affinization", c.affinization, "affinization: u or d")
        ->capture_default_str();
    cmd->add_option("--out", c.out, "output format: text or json")->capture_default_str();
}

void emit(const json& j, const std::string& fmt, const std::string& text) {
    if (fmt == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int run_verify(const std::string& suite, int M, int order, int N, std::uint64_t seed) {
    std::vector<SuiteResult> results;
    if (suite == "routes") results.push_back(verify_routes());
    else if (suite == "specialization") results.push_back(verify_specialization());
    else if (suite == "weylchar") results.push_back(verify_weylchar());
    else if (suite == "norms") results.push_back(verify_norms(order));
    else if (suite == "eigen") results.push_back(verify_eigen());
    else if (suite == "rr") results.push_back(verify_rr_suite(M, order));
    else if (suite == "toda") results.push_back(verify_toda(N, order));
    else if (suite == "filtration") results.push_back(verify_filtration());
    else if (suite == "structural") results.push_back(verify_structural(seed));
    else if (suite == "all") results = verify_all(seed);
    else throw std::invalid_argument("unknown suite: " + suite);

    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks
                  << " checks)\n";
        for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"macweyl: nonsymmetric Macdonald polynomials, generalized Weyl module "
                 "characters, and nonsymmetric q-Whittaker series, in exact arithmetic"};
    app.require_subcommand(1);

    // ---- E ------------------------------------------------------------------
    Common ec;
    std::string e_lambda, e_sigma = "id", e_mode = "generic";
    int e_cap = 20;
    auto* cmd_e = app.add_subcommand("E", "evaluate E_lambda^sigma(X; q, v)");
    add_common(cmd_e, ec);
    cmd_e->add_option("--lambda", e_lambda, "weight, comma-separated integers")->required();
    cmd_e->add_option("--sigma", e_sigma, "finite Weyl element (id, w0, s1s2...)")
        ->capture_default_str();
    cmd_e->add_option("--mode", e_mode, "generic, v0 or vinf")->capture_default_str();
    cmd_e->add_option("--cap", e_cap, "walk-length cap for generic mode")->capture_default_str();

    // ---- weyl-char ----------------------------------------------------------
    Common wc;
    std::string w_lambda, w_sigma = "id", w_char;
    bool w_global = false;
    int w_order = 12;
    auto* cmd_w = app.add_subcommand("weyl-char", "graded Weyl module characters");
    add_common(cmd_w, wc);
    cmd_w->add_option("--lambda", w_lambda, "antidominant weight")->required();
    cmd_w->add_option("--sigma", w_sigma, "finite Weyl element")->capture_default_str();
    cmd_w->add_flag("--global", w_global, "global module character as a q-series");
    cmd_w->add_option("--order", w_order, "series truncation order")->capture_default_str();
    cmd_w->add_option("--char", w_char, "characteristic i,m along the word of t_{-omega_i}");

    // ---- qbg ----------------------------------------------------------------
    Common qc;
    qc.out = "dot";
    auto* cmd_q = app.add_subcommand("qbg", "quantum Bruhat graph");
    add_common(cmd_q, qc);

    // ---- walks --------------------------------------------------------------
    Common kc;
    kc.out = "json";
    std::string k_lambda, k_sigma = "id", k_filter = "none";
    auto* cmd_k = app.add_subcommand("walks", "alcove walks for m_lambda");
    add_common(cmd_k, kc);
    cmd_k->add_option("--lambda", k_lambda, "weight")->required();
    cmd_k->add_option("--sigma", k_sigma, "starting element")->capture_default_str();
    cmd_k->add_option("--filter", k_filter, "none, qb or rqb")->capture_default_str();

    // ---- whittaker ----------------------------------------------------------
    Common hc;
    hc.out = "json";
    std::string h_sigma = "id";
    int h_n = 16, h_order = 12;
    auto* cmd_h = app.add_subcommand(
        "whittaker", "series part of the nonsymmetric q-Whittaker function, one component");
    add_common(cmd_h, hc);
    cmd_h->add_option("--sigma", h_sigma, "component")->capture_default_str();
    cmd_h->add_option("--N", h_n, "include lambda with (lambda,lambda)/2 <= N")
        ->capture_default_str();
    cmd_h->add_option("--q-order", h_order, "q-series truncation")->capture_default_str();

    // ---- check-eigen --------------------------------------------------------
    Common gc;
    std::string g_lambda, g_mu;
    auto* cmd_g = app.add_subcommand("check-eigen", "both sides of the Y-eigenvalue equation");
    add_common(cmd_g, gc);
    cmd_g->add_option("--lambda", g_lambda, "weight")->required();
    cmd_g->add_option("--mu", g_mu, "Y-weight, comma-separated integers")->required();

    // ---- verify -------------------------------------------------------------
    std::string v_suite = "all";
    int v_m = 8, v_order = 12, v_n = 16;
    std::uint64_t v_seed = 12345;
    std::string v_type_ignored;
    auto* cmd_v = app.add_subcommand("verify", "run a verification suite");
    cmd_v->add_option("--suite", v_suite,
                      "routes specialization weylchar norms eigen rr toda filtration "
                      "structural all")
        ->capture_default_str();
    cmd_v->add_option("--type", v_type_ignored, "accepted for symmetry; suites pin their grids");
    cmd_v->add_option("--M", v_m, "recurrence bound for the rr suite")->capture_default_str();
    cmd_v->add_option("--order", v_order, "series order")->capture_default_str();
    cmd_v->add_option("--N", v_n, "Whittaker norm bound for the toda suite")
        ->capture_default_str();
    cmd_v->add_option("--seed", v_seed, "seed for randomized property checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_e->parsed()) {
            const RootDatum& D = ec.datum();
            Weight lam = parse_lambda(D, e_lambda);
            int sigma = parse_sigma(D, e_sigma);
            auto res = ram_yip(D, lam, sigma, eval_mode_from_string(e_mode), e_cap);
            emit(json{{"type", D.describe()},
                      {"lambda", lam.c},
                      {"sigma", D.weyl().name(sigma)},
                      {"mode", e_mode},
                      {"value", laurent_to_json(res.value)}},
                 ec.out, res.value.str(D.two_e()));
        } else if (cmd_w->parsed()) {
            const RootDatum& D = wc.datum();
            CharacterEngine eng(D);
            Weight lam = parse_lambda(D, w_lambda);
            int sigma = parse_sigma(D, w_sigma);
            if (!w_char.empty()) {
                auto comma = w_char.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("--char expects i,m");
                int i = std::stoi(w_char.substr(0, comma));
                int m = std::stoi(w_char.substr(comma + 1));
                const auto& ch = eng.char_with_characteristic(sigma, lam, i, m);
                emit(json{{"word", eng.characteristic_word_string(i)},
                          {"value", laurent_to_json(ch)}},
                     wc.out, ch.str(D.two_e()));
            } else if (w_global) {
                auto series = eng.global_char(sigma, lam, w_order);
                std::string text;
                for (int j = 0; j <= series.order(); ++j)
                    text += "q^" + std::to_string(j) + ": " + series[j].str(D.two_e()) + "\n";
                emit(series_to_json(series), wc.out, text);
            } else {
                const auto& ch = eng.local_char(sigma, lam);
                emit(json{{"value", laurent_to_json(ch)}}, wc.out, ch.str(D.two_e()));
            }
        } else if (cmd_q->parsed()) {
            const RootDatum& D = qc.datum();
            const auto& Q = qbg_for(D);
            if (qc.out == "dot") {
                std::cout << Q.to_dot();
            } else {
                json edges = json::array();
                for (int g = 0; g < D.weyl().size; ++g)
                    for (int r = 0; r < D.num_positive(); ++r) {
                        EdgeKind k = Q.has_edge(g, r);
                        if (k == EdgeKind::None) continue;
                        edges.push_back(
                            json{{"from", D.weyl().name(g)},
                                 {"to", D.weyl().name(Q.target(g, r))},
                                 {"label", D.roots()[r].y_coords},
                                 {"kind", k == EdgeKind::Bruhat ? "bruhat" : "quantum"}});
                    }
                emit(json{{"vertices", D.weyl().size}, {"edges", edges}}, "json", "");
            }
        } else if (cmd_k->parsed()) {
            const RootDatum& D = kc.datum();
            Weight lam = parse_lambda(D, k_lambda);
            int sigma = parse_sigma(D, k_sigma);
            WalkFilter filter = WalkFilter::None;
            if (k_filter == "qb") filter = WalkFilter::QuantumBruhat;
            else if (k_filter == "rqb") filter = WalkFilter::ReverseQuantumBruhat;
            else if (k_filter != "none")
                throw std::invalid_argument("--filter must be none, qb or rqb");
            auto ctx = walk_context_for_weight(D, lam);
            auto walks = collect_walks(ctx, sigma, filter);
            json arr = json::array();
            for (const auto& w : walks) arr.push_back(walk_to_json(D, w));
            std::string text = "type " + reduced_word_string(ctx.word) + ", " +
                               std::to_string(walks.size()) + " walks";
            emit(json{{"word", reduced_word_string(ctx.word)}, {"walks", arr}}, kc.out, text);
        } else if (cmd_h->parsed()) {
            const RootDatum& D = hc.datum();
            int sigma = parse_sigma(D, h_sigma);
            auto comp = omega_component(D, sigma, h_n, h_order);
            std::string text;
            for (const auto& t : comp.terms)
                text += "lambda=" + t.lambda.str() + " coefficient to q^" +
                        std::to_string(h_order) + "\n";
            emit(whittaker_to_json(D, comp), hc.out, text);
        } else if (cmd_g->parsed()) {
            const RootDatum& D = gc.datum();
            Weight lam = parse_lambda(D, g_lambda);
            Weight mu(LatticeTag::Y, parse_lambda(D, g_mu).c);
            auto e = ram_yip(D, lam, D.weyl().id, EvalMode::Generic).value;
            auto lhs = apply_Y(D, mu, e);
            auto rhs = y_eigenvalue(D, lam, mu) * e;
            bool equal = lhs == rhs;
            emit(json{{"lhs", laurent_to_json(lhs)},
                      {"rhs", laurent_to_json(rhs)},
                      {"eigenvalue", bipoly_to_json(y_eigenvalue(D, lam, mu).num())},
                      {"equal", equal}},
                 gc.out,
                 "Y^mu E_lambda   = " + lhs.str(D.two_e()) + "\n" +
                     "eigenvalue * E = " + rhs.str(D.two_e()) + "\n" +
                     (equal ? "equal" : "NOT equal"));
            return equal ? 0 : 1;
        } else if (cmd_v->parsed()) {
            return run_verify(v_suite, v_m, v_order, v_n, v_seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
