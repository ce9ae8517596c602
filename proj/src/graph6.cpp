#include "oor/graph6.hpp"

namespace oor {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(size_t offset, const std::string& what) {
    throw InputError("graph6: " + what + " at byte " + std::to_string(offset));
}

int sixbits(std::string_view s, size_t pos, size_t base) {
    if (pos >= s.size()) fail(base + pos, "unexpected end of input");
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) fail(base + pos, "character out of range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t base = 0;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) fail(base, "empty input");
    for (size_t i = 0; i < text.size(); ++i) sixbits(text, i, base);

    size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = sixbits(text, 0, base);
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits(text, i, base);
        pos = 8;
        if (n <= 258047) fail(base, "non-canonical length field");
    } else {
        for (size_t i = 1; i < 4; ++i) n = (n << 6) | sixbits(text, i, base);
        pos = 4;
        if (n <= 62) fail(base, "non-canonical length field");
    }
    if (n > 100000) fail(base, "graph too large");

    Graph g(static_cast<int>(n));
    const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t bytes = (bits + 5) / 6;
    if (text.size() < pos + bytes) fail(base + text.size(), "truncated adjacency data");
    if (text.size() > pos + bytes) fail(base + pos + bytes, "trailing garbage");

    size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sixbits(text, pos + k / 6, base);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        const int last = sixbits(text, pos + bytes - 1, base);
        if (last & ((1 << (6 - bits % 6)) - 1)) fail(base + pos + bytes - 1, "nonzero padding bits");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    const long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace oor
