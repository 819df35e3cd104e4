#ifndef TIA_VERTEX_SET_HPP
#define TIA_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tia {

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// Binary operations require both operands to share the same universe.
/// Iteration visits members in increasing id order.
class VertexSet {
public:
    using word_type = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_(word_count(universe), 0)
    {
        if (universe < 0)
            throw std::invalid_argument("VertexSet: negative universe");
    }

    VertexSet(int universe, std::initializer_list<int> members)
        : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (auto& w : s.words_)
            w = ~word_type{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet from_range(int universe, const Range& members)
    {
        VertexSet s(universe);
        for (int v : members)
            s.insert(v);
        return s;
    }

    /// The set {0, ..., count-1}.
    static VertexSet prefix(int universe, int count)
    {
        VertexSet s(universe);
        for (int v = 0; v < count; ++v)
            s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept
    {
        return v >= 0 && v < universe_ &&
               ((words_[static_cast<std::size_t>(v) / word_bits] >> (v % word_bits)) & 1U);
    }

    void insert(int v)
    {
        check(v);
        words_[static_cast<std::size_t>(v) / word_bits] |= word_type{1} << (v % word_bits);
    }

    void erase(int v)
    {
        check(v);
        words_[static_cast<std::size_t>(v) / word_bits] &= ~(word_type{1} << (v % word_bits));
    }

    int size() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    /// Smallest member, or -1 when empty.
    int first() const noexcept { return next(0); }

    /// Smallest member >= from, or -1.
    int next(int from) const noexcept
    {
        if (from < 0)
            from = 0;
        if (from >= universe_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from) / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w != 0)
                return static_cast<int>(wi * word_bits) + std::countr_zero(w);
            if (++wi == words_.size())
                return -1;
            w = words_[wi];
        }
    }

    bool intersects(const VertexSet& o) const
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    int intersection_size(const VertexSet& o) const
    {
        same_universe(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const
    {
        VertexSet s = *this;
        for (auto& w : s.words_)
            w = ~w;
        s.trim();
        return s;
    }

    /// Same members in a universe of the given size; members beyond it are an error.
    VertexSet resized(int universe) const
    {
        VertexSet s(universe);
        for (int v : *this)
            s.insert(v);
        return s;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this)
            out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    /// Order by sorted member sequence (lexicographic); the empty set is least.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y)
                return x < y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        return x < 0 && y >= 0;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = std::hash<int>{}(universe_);
        for (auto w : words_)
            h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++()
        {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_ = nullptr;
        int v_ = -1;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static std::size_t word_count(int universe)
    {
        return universe <= 0 ? 0 : (static_cast<std::size_t>(universe) + word_bits - 1) / word_bits;
    }

    void check(int v) const
    {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex id out of range");
    }

    void same_universe(const VertexSet& o) const
    {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }

    void trim()
    {
        if (words_.empty())
            return;
        int rem = universe_ % word_bits;
        if (rem != 0)
            words_.back() &= (word_type{1} << rem) - 1;
    }

    int universe_ = 0;
    std::vector<word_type> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

} // namespace tia

#endif
