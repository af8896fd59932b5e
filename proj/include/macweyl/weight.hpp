#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace macweyl {

/// The two lattices of a double affine datum: X carries the polynomial
/// variables, Y the translations acting on them (and vice versa for the
/// auxiliary system).
enum class LatticeTag { X, Y };

inline const char* lattice_name(LatticeTag t) { return t == LatticeTag::X ? "X" : "Y"; }

/// Lattice element in fundamental-weight coordinates.
struct Weight {
    LatticeTag tag = LatticeTag::X;
    std::vector<int> c;

    Weight() = default;
    Weight(LatticeTag t, std::vector<int> coords) : tag(t), c(std::move(coords)) {}

    static Weight zero(LatticeTag t, int rank) { return Weight(t, std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        for (int x : c) if (x != 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        check_same(o);
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_same(o);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const {
        Weight r = *this;
        for (int& x : r.c) x = -x;
        return r;
    }
    friend Weight operator*(int k, Weight w) {
        for (int& x : w.c) x *= k;
        return w;
    }

    bool operator==(const Weight& o) const { return tag == o.tag && c == o.c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    /// Lexicographic coordinate order (used for deterministic serialization).
    bool operator<(const Weight& o) const {
        if (tag != o.tag) throw std::logic_error("comparing weights of different lattices");
        return c < o.c;
    }

    bool dominant() const {
        for (int x : c) if (x < 0) return false;
        return true;
    }
    bool antidominant() const {
        for (int x : c) if (x > 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

private:
    void check_same(const Weight& o) const {
        if (tag != o.tag || c.size() != o.c.size())
            throw std::invalid_argument("weight lattice mismatch");
    }
};

}  // namespace macweyl
