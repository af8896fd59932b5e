#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macweyl/root_data.hpp"

namespace macweyl {

enum class EdgeKind { None, Bruhat, Quantum };

/// Directed graph on the finite Weyl group with edges w -> w s_alpha for
/// alpha a positive root of Delta(Y): Bruhat edges raise length by 1,
/// quantum edges drop it by <2 rho^{vee Y}, alpha> - 1.
class QuantumBruhatGraph {
public:
    explicit QuantumBruhatGraph(const RootDatum& datum) : D_(&datum) {
        const WeylGroup& W = datum.weyl();
        int m = datum.num_positive();
        edges_.assign(W.size, std::vector<EdgeKind>(m, EdgeKind::None));
        for (int g = 0; g < W.size; ++g) {
            for (int r = 0; r < m; ++r) {
                int gs = W.mult(g, datum.reflection(r));
                int lg = W.length[g], lgs = W.length[gs];
                if (lgs == lg + 1) {
                    edges_[g][r] = EdgeKind::Bruhat;
                } else if (lgs == lg - datum.two_rho_y_pairing_root(r) + 1) {
                    edges_[g][r] = EdgeKind::Quantum;
                }
            }
        }
    }

    const RootDatum& datum() const { return *D_; }

    /// Edge w -> w s_alpha with label a positive Y-root.
    EdgeKind has_edge(int w, int yroot) const {
        if (!D_->positive(yroot))
            throw std::invalid_argument("has_edge: label must be a positive root");
        return edges_[w][yroot];
    }

    int target(int w, int yroot) const { return D_->weyl().mult(w, D_->reflection(yroot)); }

    int edge_count() const {
        int n = 0;
        for (const auto& row : edges_)
            for (EdgeKind k : row)
                if (k != EdgeKind::None) ++n;
        return n;
    }

    /// All label-subsequence paths from sigma along the given positive-root
    /// labels: choices 0 <= m_1 < m_2 < ... of positions, each step a QBG
    /// edge. Returns (endpoint, chosen 0-based positions).
    struct Path {
        int end;
        std::vector<int> positions;
    };

    std::vector<Path> filtration_paths(int sigma, const std::vector<int>& labels) const {
        std::vector<Path> out;
        std::vector<int> chosen;
        walk(sigma, labels, 0, chosen, out);
        return out;
    }

    /// Graphviz rendering: vertices ordered by (length, shortlex word),
    /// Bruhat edges solid, quantum edges dashed, labels in root coordinates.
    std::string to_dot() const {
        const WeylGroup& W = D_->weyl();
        std::vector<int> order(W.size);
        for (int g = 0; g < W.size; ++g) order[g] = g;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (W.length[a] != W.length[b]) return W.length[a] < W.length[b];
            return W.word[a] < W.word[b];
        });
        std::ostringstream os;
        os << "digraph QBG {\n";
        for (int g : order) os << "  \"" << W.name(g) << "\";\n";
        for (int g : order) {
            for (int r = 0; r < D_->num_positive(); ++r) {
                EdgeKind k = edges_[g][r];
                if (k == EdgeKind::None) continue;
                os << "  \"" << W.name(g) << "\" -> \"" << W.name(target(g, r)) << "\""
                   << " [label=\"" << root_label(r) << "\""
                   << (k == EdgeKind::Quantum ? ", style=dashed" : "") << "];\n";
            }
        }
        os << "}\n";
        return os.str();
    }

private:
    std::string root_label(int r) const {
        const auto& c = D_->roots()[r].y_coords;
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

    void walk(int vertex, const std::vector<int>& labels, size_t pos, std::vector<int>& chosen,
              std::vector<Path>& out) const {
        if (pos == labels.size()) {
            out.push_back(Path{vertex, chosen});
            return;
        }
        // skip this position
        walk(vertex, labels, pos + 1, chosen, out);
        // or take it when the edge exists
        if (has_edge(vertex, labels[pos]) != EdgeKind::None) {
            chosen.push_back(static_cast<int>(pos));
            walk(target(vertex, labels[pos]), labels, pos + 1, chosen, out);
            chosen.pop_back();
        }
    }

    const RootDatum* D_;
    std::vector<std::vector<EdgeKind>> edges_;
};

inline const QuantumBruhatGraph& qbg_for(const RootDatum& D) {
    static std::map<std::pair<int, int>, const QuantumBruhatGraph*> cache;
    auto key = std::make_pair(static_cast<int>(D.type()), static_cast<int>(D.kind()));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, new QuantumBruhatGraph(D)).first;
    return *it->second;
}

}  // namespace macweyl
