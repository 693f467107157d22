#include "regindep/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "regindep/errors.hpp"

namespace regindep {
namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
}

int sextet(char c)
{
    if (c < 63 || c > 126)
        throw ParseError(std::string("graph6: byte out of range: ") + std::to_string(int(c)));
    return c - kOffset;
}

}  // namespace

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    append_order(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph decode_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        if (pos + static_cast<std::size_t>(count) > text.size())
            throw ParseError("graph6: truncated header");
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i)
            v = (v << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
        return v;
    };
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = take(3);
        if (n <= 62)
            throw ParseError("graph6: non-canonical 4-byte header");
    } else {
        pos = 2;
        n = take(6);
        if (n <= 258047)
            throw ParseError("graph6: non-canonical 8-byte header");
    }
    if (n > (1u << 16))
        throw ParseError("graph6: order too large for this toolkit");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    GraphBuilder b(static_cast<int>(n));
    // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    std::uint64_t k = 0;
    Vertex i = 0, j = 1;
    for (std::size_t byte = 0; byte < bytes; ++byte) {
        const int value = sextet(text[pos + byte]);
        for (int bit = 5; bit >= 0; --bit, ++k) {
            const bool set = (value >> bit) & 1;
            if (k >= bits) {
                if (set)
                    throw ParseError("graph6: padding bit set");
                continue;
            }
            if (set)
                b.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return b.build();
}

namespace {

std::vector<std::pair<long, long>> scan_pairs(std::string_view text)
{
    std::vector<std::pair<long, long>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected exactly two integers");
        auto parse = [&](const std::string& s) {
            long v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size() || v < 0)
                throw ParseError("edge list line " + std::to_string(lineno) + ": bad integer '" +
                                 s + "'");
            return v;
        };
        pairs.emplace_back(parse(a), parse(b));
    }
    return pairs;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    auto pairs = scan_pairs(text);
    std::size_t first_edge = 0;
    long n = 0;
    if (!pairs.empty()) {
        const auto [hn, hm] = pairs.front();
        bool header = static_cast<std::size_t>(hm) == pairs.size() - 1;
        for (std::size_t i = 1; header && i < pairs.size(); ++i)
            header = pairs[i].first < hn && pairs[i].second < hn;
        if (header) {
            n = hn;
            first_edge = 1;
        }
    }
    if (first_edge == 0)
        for (auto [u, v] : pairs)
            n = std::max({n, u + 1, v + 1});
    if (n > (1 << 16))
        throw ParseError("edge list: order too large");
    GraphBuilder b(static_cast<int>(n));
    for (std::size_t i = first_edge; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u == v)
            throw ParseError("edge list: self-loop at " + std::to_string(u));
        if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError("edge list: repeated edge " + std::to_string(u) + " " +
                             std::to_string(v));
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return b.build();
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_text(std::string_view text)
{
    auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos)
        throw ParseError("empty graph input");
    auto end = text.find_last_not_of(" \t\r\n");
    auto trimmed = text.substr(start, end - start + 1);
    if (trimmed.find_first_of(" \t\r\n") == std::string_view::npos)
        return decode_graph6(trimmed);
    return parse_edge_list(text);
}

}  // namespace regindep
