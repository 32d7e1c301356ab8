#pragma once

/*
 * Set partitions of {1..N} in canonical form: indices sorted within each
 * block, blocks sorted by their minimal element. Canonical form resolves
 * "unique up to relabelling" into a single representative. Internally all
 * indices are 0-based; serialization is 1-based.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "simkern/errors.hpp"

namespace simkern {

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

class Partition {
public:
    /// Validates that the blocks are non-empty, disjoint and cover {0..n-1},
    /// then canonicalizes.
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n) {
        if (n == 0) throw ShapeError("partition of the empty set");
        std::vector<bool> seen(n, false);
        for (auto& b : blocks) {
            if (b.empty()) throw ShapeError("partition with an empty block");
            for (std::size_t i : b) {
                if (i >= n) throw ShapeError("partition index out of range");
                if (seen[i]) throw ShapeError("partition blocks are not disjoint");
                seen[i] = true;
            }
            std::sort(b.begin(), b.end());
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw ShapeError("partition does not cover the ground set");
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        blocks_ = std::move(blocks);
        rebuild_block_of();
    }

    static Partition singletons(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks(n);
        for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
        return {n, std::move(blocks)};
    }

    static Partition single_block(std::size_t n) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), std::size_t{0});
        return {n, {all}};
    }

    std::size_t ground_size() const { return n_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& block(std::size_t j) const { return blocks_[j]; }

    /// Index of the block containing element i.
    std::size_t block_of(std::size_t i) const {
        if (i >= n_) throw ShapeError("element out of range");
        return block_of_[i];
    }

    bool same_block(std::size_t i, std::size_t j) const { return block_of(i) == block_of(j); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// Deterministic ordering so partitions can live in sorted containers.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.blocks_ < b.blocks_;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (j > 0) s += ",";
            s += "{";
            for (std::size_t k = 0; k < blocks_[j].size(); ++k) {
                if (k > 0) s += ",";
                s += std::to_string(blocks_[j][k] + 1);
            }
            s += "}";
        }
        return s + "}";
    }

private:
    void rebuild_block_of() {
        block_of_.assign(n_, 0);
        for (std::size_t j = 0; j < blocks_.size(); ++j)
            for (std::size_t i : blocks_[j]) block_of_[i] = j;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Meet of two partitions: connect i, i' by an edge when they share a block
/// of either partition; the connected components of that graph are the
/// blocks of the meet.
inline Partition partition_meet(const Partition& a, const Partition& b) {
    if (a.ground_size() != b.ground_size())
        throw ShapeError("partition meet over different ground sets");
    const std::size_t n = a.ground_size();
    detail::DisjointSets ds(n);
    for (const auto& blk : a.blocks())
        for (std::size_t k = 1; k < blk.size(); ++k) ds.unite(blk[0], blk[k]);
    for (const auto& blk : b.blocks())
        for (std::size_t k = 1; k < blk.size(); ++k) ds.unite(blk[0], blk[k]);
    std::vector<std::vector<std::size_t>> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[ds.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& c : comp)
        if (!c.empty()) blocks.push_back(std::move(c));
    return {n, std::move(blocks)};
}

/// True iff every block of `fine` is contained in a block of `coarse`.
inline bool is_refinement(const Partition& fine, const Partition& coarse) {
    if (fine.ground_size() != coarse.ground_size())
        throw ShapeError("refinement test over different ground sets");
    for (const auto& blk : fine.blocks()) {
        std::size_t target = coarse.block_of(blk.front());
        for (std::size_t i : blk)
            if (coarse.block_of(i) != target) return false;
    }
    return true;
}

namespace detail {

/// Enumerate all set partitions of {0..m-1} as restricted growth strings:
/// a[0] = 0 and a[i] <= max(a[0..i-1]) + 1, where a[i] is the (0-based)
/// class label of element i.
template <typename Fn>
void for_each_rgs(std::size_t m, Fn&& fn) {
    std::vector<std::size_t> a(m, 0);
    auto recurse = [&](auto&& self, std::size_t i, std::size_t num_classes) -> void {
        if (i == m) {
            fn(a, num_classes);
            return;
        }
        for (std::size_t label = 0; label <= num_classes; ++label) {
            a[i] = label;
            self(self, i + 1, std::max(num_classes, label + 1));
        }
    };
    recurse(recurse, 0, 0);
}

}  // namespace detail

/// All partitions coarser than or equal to `p` (i.e. all pi' with p
/// refining pi'), obtained by merging blocks of p in every possible way.
/// Includes p itself.
inline std::vector<Partition> coarsenings(const Partition& p) {
    const std::size_t m = p.num_blocks();
    std::vector<Partition> out;
    detail::for_each_rgs(m, [&](const std::vector<std::size_t>& labels, std::size_t num_classes) {
        std::vector<std::vector<std::size_t>> merged(num_classes);
        for (std::size_t j = 0; j < m; ++j) {
            const auto& blk = p.block(j);
            auto& target = merged[labels[j]];
            target.insert(target.end(), blk.begin(), blk.end());
        }
        out.emplace_back(p.ground_size(), std::move(merged));
    });
    return out;
}

/// All partitions of {1..n}: Bell(n) many.
inline std::vector<Partition> all_partitions(std::size_t n) {
    return coarsenings(Partition::singletons(n));
}

}  // namespace simkern
