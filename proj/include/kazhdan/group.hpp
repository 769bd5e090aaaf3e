#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

#include "element.hpp"
#include "error.hpp"

namespace kz {

inline constexpr size_t kDefaultCap = 2000000;

/// Explicitly enumerated finite group. Elements live in one flat array with a
/// fixed stride; index 0 is the identity and the order is breadth-first from it.
class FiniteGroup {
public:
    FiniteGroup() = default;

    const Space& space() const { return space_; }
    size_t order() const { return count_; }
    const std::vector<GroupElement>& generators() const { return gens_; }

    const uint16_t* raw(size_t i) const { return data_.data() + i * size_t(stride_); }
    GroupElement element(size_t i) const {
        return GroupElement(space_, std::vector<uint16_t>(raw(i), raw(i) + stride_));
    }

    /// Index of the element with these entries, or -1.
    long find(const uint16_t* x) const {
        size_t mask = table_.size() - 1;
        for (size_t h = hash(x) & mask;; h = (h + 1) & mask) {
            uint32_t slot = table_[h];
            if (slot == kEmpty) return -1;
            if (std::memcmp(raw(slot), x, sizeof(uint16_t) * stride_) == 0) return long(slot);
        }
    }
    long index_of(const GroupElement& g) const {
        if (!(g.space() == space_)) return -1;
        return find(g.data());
    }
    bool contains(const GroupElement& g) const { return index_of(g) >= 0; }

    /// Index of element i times element j.
    size_t mul_index(size_t i, size_t j) const {
        std::vector<uint16_t> out(stride_);
        space_.mul(raw(i), raw(j), out.data());
        long r = find(out.data());
        if (r < 0) throw Error(Errc::NotSubgroup, "product left the group");
        return size_t(r);
    }

    /// Breadth-first closure of the generators under right multiplication.
    static FiniteGroup closure(const std::vector<GroupElement>& gens, size_t cap = kDefaultCap) {
        if (gens.empty()) throw Error(Errc::BadParameters, "closure needs at least one generator");
        FiniteGroup G;
        G.space_ = gens[0].space();
        for (auto& g : gens)
            if (!(g.space() == G.space_)) throw Error(Errc::MixedVariant, "generators from different spaces");
        G.gens_ = gens;
        G.stride_ = G.space_.width();
        G.rehash(64);
        std::vector<uint16_t> id(G.stride_);
        G.space_.identity(id.data());
        G.insert(id.data());
        std::vector<uint16_t> tmp(G.stride_);
        for (size_t i = 0; i < G.count_; ++i) {
            for (auto& g : gens) {
                G.space_.mul(G.raw(i), g.data(), tmp.data());
                if (G.find(tmp.data()) >= 0) continue;
                if (G.count_ >= cap) throw Error(Errc::CapExceeded, "closure exceeds cap " + std::to_string(cap));
                G.insert(tmp.data());
            }
        }
        G.data_.shrink_to_fit();
        return G;
    }

    static FiniteGroup cyclic_subgroup(const GroupElement& g, size_t cap = kDefaultCap) { return closure({g}, cap); }

private:
    static constexpr uint32_t kEmpty = 0xffffffffu;
    Space space_;
    int stride_ = 0;
    size_t count_ = 0;
    std::vector<uint16_t> data_;
    std::vector<uint32_t> table_;
    std::vector<GroupElement> gens_;

    size_t hash(const uint16_t* x) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < stride_; ++i) {
            h ^= x[i];
            h *= 1099511628211ull;
        }
        return size_t(h ^ (h >> 29));
    }

    void rehash(size_t n) {
        table_.assign(n, kEmpty);
        for (size_t i = 0; i < count_; ++i) place(uint32_t(i));
    }
    void place(uint32_t idx) {
        size_t mask = table_.size() - 1;
        size_t h = hash(raw(idx)) & mask;
        while (table_[h] != kEmpty) h = (h + 1) & mask;
        table_[h] = idx;
    }
    void insert(const uint16_t* x) {
        data_.insert(data_.end(), x, x + stride_);
        ++count_;
        if (count_ * 2 > table_.size()) rehash(table_.size() * 2);
        else place(uint32_t(count_ - 1));
    }
};

inline FiniteGroup closure(const std::vector<GroupElement>& gens, size_t cap = kDefaultCap) {
    return FiniteGroup::closure(gens, cap);
}

inline FiniteGroup cyclic_subgroup(const GroupElement& g) { return FiniteGroup::cyclic_subgroup(g); }

} // namespace kz
