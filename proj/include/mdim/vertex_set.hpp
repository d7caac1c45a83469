#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace mdim {

// Fixed-capacity bitset over {0, ..., universe-1} with the usual set algebra.
// Also reused as a set of pair ids by the covering machinery.
class VertexSet {
  public:
    VertexSet() : universe_(0) {}
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        match(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const VertexSet& o) const {
        match(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
    // an arbitrary strict order, usable as a map/sort key
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        return a.words_ < b.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    // lowest member, or -1 when empty
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

  private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet index");
    }
    void match(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::logic_error("VertexSet universe mismatch");
    }

    int universe_;
    std::vector<std::uint64_t> words_;
};

}  // namespace mdim
