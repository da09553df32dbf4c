#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ferrers {

// Raised when an integer sequence is not a partition. `index` is the
// 1-based position of the first offending entry (0 for an empty input).
class invalid_partition : public std::invalid_argument {
public:
    invalid_partition(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index(index) {}
    std::size_t index;
};

// A partition lambda_1 >= lambda_2 >= ... >= lambda_n >= 1.
// Parts are addressed 1-based throughout, matching the usual subscripts.
struct Partition {
    std::vector<int> parts;

    int n() const { return static_cast<int>(parts.size()); }   // rows
    int m() const { return parts.front(); }                    // columns
    int part(int i) const { return parts[static_cast<std::size_t>(i) - 1]; }

    long long weight() const {
        return std::accumulate(parts.begin(), parts.end(), 0LL);
    }

    // Largest row index whose part is >= 2 (0 if all parts are 1).
    int s() const {
        for (int i = n(); i >= 1; --i)
            if (part(i) >= 2) return i;
        return 0;
    }

    bool operator==(const Partition& other) const { return parts == other.parts; }
    bool operator<(const Partition& other) const { return parts < other.parts; }
};

inline Partition validate_partition(const std::vector<int>& raw) {
    if (raw.empty()) throw invalid_partition(0, "partition must be nonempty");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1) {
            std::ostringstream os;
            os << "partition entry at index " << i + 1 << " is " << raw[i] << " (must be >= 1)";
            throw invalid_partition(i + 1, os.str());
        }
        if (i > 0 && raw[i] > raw[i - 1]) {
            std::ostringstream os;
            os << "partition increases at index " << i + 1 << " (" << raw[i - 1] << " < " << raw[i] << ")";
            throw invalid_partition(i + 1, os.str());
        }
    }
    return Partition{raw};
}

// Dual (conjugate) partition: dual(p)_j = #{ i : lambda_i >= j }.
inline Partition dual(const Partition& p) {
    std::vector<int> d(static_cast<std::size_t>(p.m()));
    for (int j = 1; j <= p.m(); ++j) {
        int count = 0;
        for (int i = 1; i <= p.n(); ++i)
            if (p.part(i) >= j) ++count;
        d[static_cast<std::size_t>(j) - 1] = count;
    }
    return Partition{std::move(d)};
}

// Corner data of the staircase boundary. The index sequence
// j_0 = 0 < j_1 < ... < j_t = n is defined by
//   j_{i+1} = max{ k : lambda_k = lambda_{j_i + 1} },
// so the outer corners are (j_i, lambda_{j_i}) and the inner corners
// (j_{i-1}, lambda_{j_i}) for i = 2..t.
struct CornerData {
    std::vector<std::pair<int, int>> outer;
    std::vector<std::pair<int, int>> inner;
    std::vector<int> j;  // j_0..j_t
    int t = 0;
};

inline CornerData corners(const Partition& p) {
    CornerData c;
    c.j.push_back(0);
    int prev = 0;
    while (prev < p.n()) {
        int value = p.part(prev + 1);
        int next = prev + 1;
        while (next < p.n() && p.part(next + 1) == value) ++next;
        c.j.push_back(next);
        c.outer.emplace_back(next, value);
        prev = next;
    }
    c.t = static_cast<int>(c.outer.size());
    for (int i = 2; i <= c.t; ++i)
        c.inner.emplace_back(c.j[static_cast<std::size_t>(i) - 1], c.outer[static_cast<std::size_t>(i) - 1].second);
    return c;
}

// --- text format: comma-separated decimal integers, whitespace tolerated ---

inline std::vector<int> parse_partition_text(const std::string& text) {
    std::vector<int> raw;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse partition entry '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size())
            throw std::invalid_argument("trailing garbage in partition entry '" + token + "'");
        raw.push_back(value);
    }
    if (raw.empty()) throw std::invalid_argument("empty partition text");
    return raw;
}

inline std::string partition_text(const Partition& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.n(); ++i) {
        if (i > 1) os << ',';
        os << p.part(i);
    }
    return os.str();
}

// --- enumeration helpers for sweeps ---

namespace detail {
inline void extend_partition(std::vector<int>& stem, int remaining, int cap,
                             const std::function<void(const Partition&)>& fn) {
    if (!stem.empty()) fn(Partition{stem});
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stem.push_back(next);
        extend_partition(stem, remaining - next, next, fn);
        stem.pop_back();
    }
}
}  // namespace detail

// Visits every partition with 1 <= |lambda| <= max_weight, each exactly once.
inline void for_each_partition_up_to_weight(int max_weight,
                                            const std::function<void(const Partition&)>& fn) {
    std::vector<int> stem;
    detail::extend_partition(stem, max_weight, max_weight, fn);
}

// Visits every partition with at most max_rows rows and parts at most max_cols.
inline void for_each_partition_in_box(int max_rows, int max_cols,
                                      const std::function<void(const Partition&)>& fn) {
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& stem, int cap) {
        if (!stem.empty()) fn(Partition{stem});
        if (static_cast<int>(stem.size()) == max_rows) return;
        for (int next = cap; next >= 1; --next) {
            stem.push_back(next);
            rec(stem, next);
            stem.pop_back();
        }
    };
    std::vector<int> stem;
    rec(stem, max_cols);
}

}  // namespace ferrers
