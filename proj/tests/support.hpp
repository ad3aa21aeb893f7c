#pragma once

// Helpers shared by the unit and acceptance binaries: rank correlation,
// a minimal XML well-formedness scan, and random frame construction.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "stormpath/collision.hpp"
#include "stormpath/precip.hpp"
#include "stormpath/rng.hpp"

namespace testsupport {

inline std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]])
            ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const std::size_t n = ra.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0)
        return 0.0;
    return cov / std::sqrt(va * vb);
}

/// Minimal XML scanner: balanced tags, quoted attribute values, one root.
inline bool xml_well_formed(const std::string& text, std::string* error = nullptr) {
    auto fail = [&](const std::string& what) {
        if (error)
            *error = what;
        return false;
    };
    std::vector<std::string> stack;
    bool root_seen = false;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            if (text[i] == '>')
                return fail("stray '>' outside a tag");
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const auto end = text.find("?>", i);
            if (end == std::string::npos)
                return fail("unterminated processing instruction");
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const auto end = text.find("-->", i);
            if (end == std::string::npos)
                return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        const bool closing = i + 1 < n && text[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        std::size_t name_start = j;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                         text[j] == '-' || text[j] == '_' || text[j] == ':'))
            ++j;
        const std::string name = text.substr(name_start, j - name_start);
        if (name.empty())
            return fail("tag with empty name");
        // Scan to the closing '>', honouring quoted attribute values.
        bool self_closing = false;
        while (j < n && text[j] != '>') {
            if (text[j] == '"') {
                const auto q = text.find('"', j + 1);
                if (q == std::string::npos)
                    return fail("unterminated attribute value in <" + name + ">");
                j = q + 1;
                continue;
            }
            if (text[j] == '<')
                return fail("'<' inside tag <" + name + ">");
            if (text[j] == '/' && j + 1 < n && text[j + 1] == '>')
                self_closing = true;
            ++j;
        }
        if (j >= n)
            return fail("unterminated tag <" + name + ">");
        i = j + 1;
        if (closing) {
            if (stack.empty() || stack.back() != name)
                return fail("mismatched closing tag </" + name + ">");
            stack.pop_back();
        } else if (!self_closing) {
            if (stack.empty() && root_seen)
                return fail("multiple root elements");
            stack.push_back(name);
            root_seen = true;
        } else if (stack.empty()) {
            if (root_seen)
                return fail("multiple root elements");
            root_seen = true;
        }
    }
    if (!stack.empty())
        return fail("unclosed tag <" + stack.back() + ">");
    if (!root_seen)
        return fail("no root element");
    return true;
}

inline int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

struct Frame {
    stormpath::BodyCloud body;
    stormpath::DropField field;
};

/// A body box dropped somewhere over the unit square plus a uniform field,
/// advanced one step so angles and wind have acted.
inline Frame random_frame(stormpath::SplitMix64& rng, int drops, double spread_deg = 0.0) {
    stormpath::SimConfig cfg;
    cfg.drop_count = drops;
    cfg.angle_spread_deg = spread_deg;

    Frame frame;
    frame.body = stormpath::spawn_body(rng, cfg);
    const double shift = rng.uniform();
    for (auto& p : frame.body.points)
        p.x -= shift;
    frame.field = stormpath::spawn_field(rng, cfg);
    stormpath::advance_drops(frame.field, cfg);
    stormpath::resolve_exits(frame.field, rng, cfg);
    return frame;
}

}  // namespace testsupport
