#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <vector>

namespace dagsets {

// Subset of a fixed vertex universe {0, ..., universe_size()-1}, stored as a
// bit array with a cached cardinality. min()/max() are word scans, so every
// query the enumerators make per node stays O(n/64).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe_size)
        : universe_(universe_size), words_((universe_size + 63) / 64, 0) {
        assert(universe_size >= 0);
    }

    static VertexSet full(int universe_size) {
        VertexSet s(universe_size);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ull;
        s.trim_tail();
        s.count_ = universe_size;
        return s;
    }

    static VertexSet range(int universe_size, int first, int last) {  // [first, last)
        VertexSet s(universe_size);
        for (int v = first; v < last; ++v) s.insert(v);
        return s;
    }

    int universe_size() const { return universe_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        assert(v >= 0 && v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && v < universe_);
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        count_ += !(w & bit);
        w |= bit;
    }

    void erase(int v) {
        assert(v >= 0 && v < universe_);
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = 1ull << (v & 63);
        count_ -= !!(w & bit);
        w &= ~bit;
    }

    void clear() {
        for (auto& w : words_) w = 0;
        count_ = 0;
    }

    // Smallest member; set must be nonempty.
    int min() const {
        assert(count_ > 0);
        for (int w = 0; w < static_cast<int>(words_.size()); ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    // Largest member; set must be nonempty.
    int max() const {
        assert(count_ > 0);
        for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        recount();
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        recount();
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        recount();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    class const_iterator {
    public:
        using value_type = int;

        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_member(v_);
            return *this;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.v_ == b.v_;
        }

    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, next_member(-1)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Raw word access, low word first. Used by the buffered parallel drivers.
    const std::vector<std::uint64_t>& words() const { return words_; }

    void assign_words(const std::uint64_t* src) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = src[w];
        trim_tail();
        recount();
    }

    friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
        os << '{';
        bool first = true;
        for (int v : s) {
            if (!first) os << ' ';
            os << v;
            first = false;
        }
        return os << '}';
    }

private:
    int next_member(int after) const {
        int v = after + 1;
        if (v >= universe_) return universe_;
        int w = v >> 6;
        std::uint64_t word = words_[w] >> (v & 63);
        if (word) return v + std::countr_zero(word);
        for (++w; w < static_cast<int>(words_.size()); ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return universe_;
    }

    void recount() {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        count_ = c;
    }

    void trim_tail() {
        if (universe_ & 63) words_.back() &= (1ull << (universe_ & 63)) - 1;
    }

    int universe_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dagsets
