#include "oor/circular_order.hpp"

#include <algorithm>

namespace oor {

CircularOrder::CircularOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)), pos_(seq_.size(), -1) {
    for (size_t i = 0; i < seq_.size(); ++i) {
        const Vertex v = seq_[i];
        if (v < 0 || v >= size() || pos_[v] >= 0) throw InputError("circular order is not a permutation");
        pos_[v] = static_cast<int>(i);
    }
}

std::vector<Vertex> CircularOrder::closed_interval(Vertex a, Vertex b) const {
    std::vector<Vertex> out;
    for (int i = position(a);; ++i) {
        out.push_back(at(i));
        if (at(i) == b) break;
    }
    return out;
}

std::vector<Vertex> CircularOrder::open_interval(Vertex a, Vertex b) const {
    auto out = closed_interval(a, b);
    if (a == b) return {};
    out.erase(out.begin());
    out.pop_back();
    return out;
}

std::vector<Vertex> CircularOrder::half_open_interval(Vertex a, Vertex b) const {
    auto out = closed_interval(a, b);
    if (a == b) return {a};
    out.pop_back();
    return out;
}

bool CircularOrder::is_contiguous(const std::vector<Vertex>& set) const {
    if (set.empty() || static_cast<int>(set.size()) >= size()) return true;
    std::vector<char> in(size(), 0);
    for (Vertex v : set) in[position(v)] = 1;
    // Contiguous on a cycle iff exactly one boundary from outside to inside.
    int entries = 0;
    for (int i = 0; i < size(); ++i)
        if (in[i] && !in[wrap(i - 1)]) ++entries;
    return entries == 1;
}

bool CircularOrder::same_cycle(const CircularOrder& o) const {
    if (size() != o.size()) return false;
    if (size() == 0) return true;
    const int shift = o.position(seq_[0]);
    for (int i = 0; i < size(); ++i)
        if (o.at(i + shift) != seq_[i]) return false;
    return true;
}

}  // namespace oor
