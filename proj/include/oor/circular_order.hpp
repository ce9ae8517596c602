#pragma once

#include <vector>

#include "oor/graph.hpp"

namespace oor {

/// A cyclic permutation of the vertices, read clockwise.
class CircularOrder {
public:
    CircularOrder() = default;
    /// Throws InputError unless `sequence` is a permutation of 0..n-1.
    explicit CircularOrder(std::vector<Vertex> sequence);

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<Vertex>& sequence() const { return seq_; }
    Vertex at(int i) const { return seq_[wrap(i)]; }
    int position(Vertex v) const { return pos_.at(v); }

    Vertex successor(Vertex v) const { return at(position(v) + 1); }
    Vertex predecessor(Vertex v) const { return at(position(v) - 1); }

    /// Number of steps going clockwise from a to b.
    int steps(Vertex a, Vertex b) const { return wrap(position(b) - position(a)); }

    /// [a,b] : a, succ(a), ..., b (clockwise, inclusive).
    std::vector<Vertex> closed_interval(Vertex a, Vertex b) const;
    /// (a,b) : strictly between a and b clockwise.
    std::vector<Vertex> open_interval(Vertex a, Vertex b) const;
    /// [a,b) : from a up to but excluding b.
    std::vector<Vertex> half_open_interval(Vertex a, Vertex b) const;

    /// True iff the members of `set` occupy consecutive positions.
    bool is_contiguous(const std::vector<Vertex>& set) const;

    /// Same cyclic sequence up to rotation.
    bool same_cycle(const CircularOrder& o) const;

    bool operator==(const CircularOrder& o) const { return seq_ == o.seq_; }

private:
    int wrap(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }

    std::vector<Vertex> seq_;
    std::vector<int> pos_;
};

}  // namespace oor
