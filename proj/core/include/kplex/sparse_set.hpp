#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace kplex {

/// Constant-time set over the universe [0, n): O(1) add/remove/contains,
/// iteration over a dense array. Iteration order depends on the operation
/// history and carries no meaning.
class SparseSet {
public:
    static constexpr std::uint32_t npos = UINT32_MAX;

    SparseSet() = default;
    explicit SparseSet(std::uint32_t universe) : pos_(universe, npos) {
        dense_.reserve(universe);
    }

    bool contains(std::uint32_t v) const { return pos_[v] != npos; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(dense_.size()); }
    bool empty() const { return dense_.empty(); }

    void add(std::uint32_t v) {
        assert(!contains(v));
        pos_[v] = static_cast<std::uint32_t>(dense_.size());
        dense_.push_back(v);
    }

    void remove(std::uint32_t v) {
        assert(contains(v));
        const std::uint32_t i = pos_[v];
        const std::uint32_t last = dense_.back();
        dense_[i] = last;
        pos_[last] = i;
        dense_.pop_back();
        pos_[v] = npos;
    }

    void clear() {
        for (std::uint32_t v : dense_) pos_[v] = npos;
        dense_.clear();
    }

    std::uint32_t operator[](std::uint32_t i) const { return dense_[i]; }
    std::span<const std::uint32_t> values() const { return dense_; }
    auto begin() const { return dense_.begin(); }
    auto end() const { return dense_.end(); }

private:
    std::vector<std::uint32_t> dense_;
    std::vector<std::uint32_t> pos_;
};

}  // namespace kplex
