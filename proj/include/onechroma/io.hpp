#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "onechroma/drawing.hpp"

namespace onechroma {

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

// Whitespace tokenization with parentheses split off as their own tokens.
inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush();
        } else if (ch == '(' || ch == ')') {
            flush();
            out.push_back(std::string(1, ch));
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return out;
}

inline int parse_int(const std::string& tok, int line_no) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line_no, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw parse_error(line_no, "expected integer, got '" + tok + "'");
    return value;
}

} // namespace detail

// Line-oriented reader shared by both text formats.
struct TextLines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)

    static TextLines from_string(const std::string& text) {
        TextLines tl;
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            auto toks = detail::tokenize(detail::strip_comment(line));
            if (!toks.empty()) tl.rows.push_back({no, std::move(toks)});
        }
        return tl;
    }
};

enum class InputFormat { Opg, EdgeList };

inline InputFormat detect_format(const std::string& text) {
    TextLines tl = TextLines::from_string(text);
    if (tl.rows.empty()) throw parse_error(1, "empty input");
    const auto& [no, toks] = tl.rows.front();
    if (toks[0] == "opg") return InputFormat::Opg;
    if (toks[0] == "v") return InputFormat::EdgeList;
    throw parse_error(no, "unrecognized format: first line must be 'opg 1' or 'v N'");
}

// Edge-list format: `v N` then one `e u v` line per edge.
inline Graph parse_edge_list(const std::string& text) {
    TextLines tl = TextLines::from_string(text);
    if (tl.rows.empty()) throw parse_error(1, "empty input");
    std::size_t i = 0;
    const auto& [vline, vtoks] = tl.rows[i];
    if (vtoks[0] != "v" || vtoks.size() != 2) throw parse_error(vline, "expected 'v N'");
    Graph g(detail::parse_int(vtoks[1], vline));
    ++i;
    for (; i < tl.rows.size(); ++i) {
        const auto& [no, toks] = tl.rows[i];
        if (toks[0] != "e" || toks.size() != 3) throw parse_error(no, "expected 'e u v'");
        int u = detail::parse_int(toks[1], no);
        int v = detail::parse_int(toks[2], no);
        try {
            g.add_edge(u, v);
        } catch (const input_error& ex) {
            throw parse_error(no, ex.what());
        }
    }
    return g;
}

// `.opg` format: magic `opg 1`, then the sections v / e / x / r in that order.
inline OnePlanarDrawing parse_opg(const std::string& text) {
    TextLines tl = TextLines::from_string(text);
    if (tl.rows.empty()) throw parse_error(1, "empty input");

    std::size_t i = 0;
    {
        const auto& [no, toks] = tl.rows[i];
        if (toks.size() != 2 || toks[0] != "opg" || toks[1] != "1")
            throw parse_error(no, "expected magic line 'opg 1'");
        ++i;
    }
    if (i >= tl.rows.size()) throw parse_error(tl.rows.back().first, "missing 'v N' line");
    int n = 0;
    {
        const auto& [no, toks] = tl.rows[i];
        if (toks[0] != "v" || toks.size() != 2) throw parse_error(no, "expected 'v N'");
        n = detail::parse_int(toks[1], no);
        if (n < 0) throw parse_error(no, "negative vertex count");
        ++i;
    }

    OnePlanarDrawing d{Graph(n)};
    // e section
    for (; i < tl.rows.size() && tl.rows[i].second[0] == "e"; ++i) {
        const auto& [no, toks] = tl.rows[i];
        if (toks.size() != 3) throw parse_error(no, "expected 'e u v'");
        int u = detail::parse_int(toks[1], no);
        int v = detail::parse_int(toks[2], no);
        try {
            d.graph.add_edge(u, v);
        } catch (const input_error& ex) {
            throw parse_error(no, ex.what());
        }
    }
    // x section: x (a b) (c d) o
    for (; i < tl.rows.size() && tl.rows[i].second[0] == "x"; ++i) {
        const auto& [no, toks] = tl.rows[i];
        if (toks.size() != 10 || toks[1] != "(" || toks[4] != ")" || toks[5] != "(" || toks[8] != ")")
            throw parse_error(no, "expected 'x (a b) (c d) o'");
        CrossingPair cp;
        cp.first = {detail::parse_int(toks[2], no), detail::parse_int(toks[3], no)};
        cp.second = {detail::parse_int(toks[6], no), detail::parse_int(toks[7], no)};
        cp.orientation = detail::parse_int(toks[9], no);
        if (cp.orientation != 0 && cp.orientation != 1)
            throw parse_error(no, "orientation must be 0 or 1");
        d.crossings.push_back(cp);
    }
    // r section: r u: t1 ... tk
    std::vector<char> have_rotation(static_cast<std::size_t>(n), 0);
    for (; i < tl.rows.size(); ++i) {
        const auto& [no, toks] = tl.rows[i];
        if (toks[0] != "r")
            throw parse_error(no, "unexpected line in rotation section (sections are v, e, x, r)");
        if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':')
            throw parse_error(no, "expected 'r u: ...'");
        int u = detail::parse_int(toks[1].substr(0, toks[1].size() - 1), no);
        if (u < 0 || u >= n) throw parse_error(no, "rotation vertex out of range");
        if (have_rotation[static_cast<std::size_t>(u)])
            throw parse_error(no, "duplicate rotation for vertex " + std::to_string(u));
        have_rotation[static_cast<std::size_t>(u)] = 1;
        std::vector<RotationToken>& rot = d.rotations[static_cast<std::size_t>(u)];
        std::size_t k = 2;
        while (k < toks.size()) {
            if (toks[k] == "z") {
                if (k + 4 >= toks.size() || toks[k + 1] != "(" || toks[k + 4] != ")")
                    throw parse_error(no, "expected 'z(a b)'");
                int a = detail::parse_int(toks[k + 2], no);
                int b = detail::parse_int(toks[k + 3], no);
                if (a == b) throw parse_error(no, "crossing token names a loop");
                rot.push_back(RotationToken::toward_crossing(make_edge(a, b)));
                k += 5;
            } else {
                rot.push_back(RotationToken::plain(detail::parse_int(toks[k], no)));
                k += 1;
            }
        }
    }
    return d;
}

// Canonical writer. Optional comment lines go right after the magic line.
inline std::string write_opg(const OnePlanarDrawing& d,
                             const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    out << "opg 1\n";
    for (const auto& cline : comments) out << "# " << cline << "\n";
    out << "v " << d.graph.vertex_count() << "\n";
    for (const auto& [u, v] : d.graph.edges()) out << "e " << u << " " << v << "\n";
    for (const CrossingPair& cp : d.crossings)
        out << "x (" << cp.first[0] << " " << cp.first[1] << ") (" << cp.second[0] << " "
            << cp.second[1] << ") " << cp.orientation << "\n";
    for (int u = 0; u < d.graph.vertex_count(); ++u) {
        out << "r " << u << ":";
        for (const RotationToken& t : d.rotations[static_cast<std::size_t>(u)]) {
            if (t.is_crossing)
                out << " z(" << t.crossed.first << " " << t.crossed.second << ")";
            else
                out << " " << t.neighbor;
        }
        out << "\n";
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

} // namespace onechroma
