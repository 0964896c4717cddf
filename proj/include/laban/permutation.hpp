#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "laban/errors.hpp"

namespace laban {

// A permutation of {0, 1, ..., n-1}, stored as the image table: element i is
// sent to mapping()[i]. Points are 0-based everywhere in the API; only the
// textual cycle form (cycle_string / parse_cycles) uses 1-based labels so the
// printed output matches the usual vertex numbering v1..vn.
class Permutation {
  public:
    Permutation() = default;

    static Permutation identity(int n) {
        check_degree(n);
        Permutation p;
        p.mapping_.resize(static_cast<std::size_t>(n));
        std::iota(p.mapping_.begin(), p.mapping_.end(), 0);
        return p;
    }

    static Permutation from_mapping(std::vector<int> mapping) {
        check_degree(static_cast<int>(mapping.size()));
        std::vector<char> seen(mapping.size(), 0);
        for (int image : mapping) {
            if (image < 0 || image >= static_cast<int>(mapping.size())) {
                throw out_of_range_error("permutation image " + std::to_string(image) +
                                         " outside {0..." + std::to_string(mapping.size() - 1) + "}");
            }
            if (seen[static_cast<std::size_t>(image)]) {
                throw malformed_cycles_error("mapping repeats image " + std::to_string(image));
            }
            seen[static_cast<std::size_t>(image)] = 1;
        }
        Permutation p;
        p.mapping_ = std::move(mapping);
        return p;
    }

    // Builds a permutation of degree n from 0-based cycles; points omitted
    // from every cycle are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        check_degree(n);
        Permutation p = identity(n);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (const auto& cycle : cycles) {
            if (cycle.empty()) {
                throw malformed_cycles_error("empty cycle");
            }
            for (int point : cycle) {
                if (point < 0 || point >= n) {
                    throw out_of_range_error("cycle point " + std::to_string(point) +
                                             " outside {0..." + std::to_string(n - 1) + "}");
                }
                if (seen[static_cast<std::size_t>(point)]) {
                    throw malformed_cycles_error("point " + std::to_string(point) +
                                                 " appears in more than one cycle");
                }
                seen[static_cast<std::size_t>(point)] = 1;
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                p.mapping_[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
            }
        }
        return p;
    }

    // Parses the textual cycle form, e.g. "(1 2)(3 4)" with 1-based labels.
    // "e" (optionally surrounded by whitespace) denotes the identity.
    static Permutation parse_cycles(const std::string& text, int n) {
        check_degree(n);
        std::string trimmed;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) {
                trimmed.push_back(c);
            }
        }
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
            trimmed.pop_back();
        }
        if (trimmed == "e") {
            return identity(n);
        }
        if (trimmed.empty()) {
            throw malformed_cycles_error("empty cycle text");
        }

        std::vector<std::vector<int>> cycles;
        std::size_t i = 0;
        while (i < trimmed.size()) {
            if (std::isspace(static_cast<unsigned char>(trimmed[i]))) {
                ++i;
                continue;
            }
            if (trimmed[i] != '(') {
                throw malformed_cycles_error("expected '(' in cycle text: " + text);
            }
            ++i;
            std::vector<int> cycle;
            std::string number;
            bool closed = false;
            for (; i < trimmed.size(); ++i) {
                char c = trimmed[i];
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    number.push_back(c);
                    continue;
                }
                if (!number.empty()) {
                    cycle.push_back(std::stoi(number) - 1);
                    number.clear();
                }
                if (c == ')') {
                    closed = true;
                    ++i;
                    break;
                }
                if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
                    throw malformed_cycles_error(std::string("unexpected character '") + c +
                                                 "' in cycle text: " + text);
                }
            }
            if (!closed) {
                throw malformed_cycles_error("unbalanced '(' in cycle text: " + text);
            }
            if (cycle.empty()) {
                throw malformed_cycles_error("empty cycle in text: " + text);
            }
            for (int point : cycle) {
                if (point < 0 || point >= n) {
                    throw out_of_range_error("cycle label " + std::to_string(point + 1) +
                                             " outside {1..." + std::to_string(n) + "}");
                }
            }
            cycles.push_back(std::move(cycle));
        }
        if (cycles.empty()) {
            throw malformed_cycles_error("no cycles found in text: " + text);
        }
        return from_cycles(n, cycles);
    }

    int degree() const { return static_cast<int>(mapping_.size()); }

    const std::vector<int>& mapping() const { return mapping_; }

    int operator()(int point) const {
        if (point < 0 || point >= degree()) {
            throw out_of_range_error("point " + std::to_string(point) + " outside {0..." +
                                     std::to_string(degree() - 1) + "}");
        }
        return mapping_[static_cast<std::size_t>(point)];
    }

    Permutation inverse() const {
        Permutation inv;
        inv.mapping_.resize(mapping_.size());
        for (std::size_t i = 0; i < mapping_.size(); ++i) {
            inv.mapping_[static_cast<std::size_t>(mapping_[i])] = static_cast<int>(i);
        }
        return inv;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < mapping_.size(); ++i) {
            if (mapping_[i] != static_cast<int>(i)) {
                return false;
            }
        }
        return true;
    }

    bool is_involution() const {
        if (is_identity()) {
            return false;
        }
        for (std::size_t i = 0; i < mapping_.size(); ++i) {
            if (mapping_[static_cast<std::size_t>(mapping_[i])] != static_cast<int>(i)) {
                return false;
            }
        }
        return true;
    }

    // Least k >= 1 with p^k = e; the lcm of the cycle lengths.
    long long order() const {
        long long result = 1;
        for (const auto& cycle : cycles()) {
            result = std::lcm(result, static_cast<long long>(cycle.size()));
        }
        return result;
    }

    // Non-trivial cycles in canonical form: each cycle begins with its
    // smallest point and cycles are listed by increasing first point.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> result;
        std::vector<char> seen(mapping_.size(), 0);
        for (int start = 0; start < degree(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) {
                continue;
            }
            std::vector<int> cycle;
            int point = start;
            do {
                seen[static_cast<std::size_t>(point)] = 1;
                cycle.push_back(point);
                point = mapping_[static_cast<std::size_t>(point)];
            } while (point != start);
            if (cycle.size() > 1) {
                result.push_back(std::move(cycle));
            }
        }
        return result;
    }

    std::vector<int> fixed_points() const {
        std::vector<int> result;
        for (int i = 0; i < degree(); ++i) {
            if (mapping_[static_cast<std::size_t>(i)] == i) {
                result.push_back(i);
            }
        }
        return result;
    }

    // Textual cycle form with 1-based labels, e.g. "(1 2)(3 4)"; identity
    // prints as "e".
    std::string cycle_string() const {
        auto nontrivial = cycles();
        if (nontrivial.empty()) {
            return "e";
        }
        std::ostringstream out;
        for (const auto& cycle : nontrivial) {
            out << '(';
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i > 0) {
                    out << ' ';
                }
                out << cycle[i] + 1;
            }
            out << ')';
        }
        return out.str();
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare_three_way(a.mapping_.begin(), a.mapping_.end(),
                                                      b.mapping_.begin(), b.mapping_.end());
    }

  private:
    static void check_degree(int n) {
        if (n <= 0) {
            throw out_of_range_error("permutation degree must be positive, got " +
                                     std::to_string(n));
        }
    }

    std::vector<int> mapping_;
};

// Composition applies the right operand first: compose(p, q)(i) == p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw domain_mismatch_error("cannot compose permutations of degree " +
                                    std::to_string(p.degree()) + " and " +
                                    std::to_string(q.degree()));
    }
    std::vector<int> mapping(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) {
        mapping[static_cast<std::size_t>(i)] = p(q(i));
    }
    return Permutation::from_mapping(std::move(mapping));
}

inline std::ostream& operator<<(std::ostream& out, const Permutation& p) {
    return out << p.cycle_string();
}

}  // namespace laban
