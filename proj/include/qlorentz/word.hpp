#pragma once

#include "qlorentz/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>

namespace qlorentz {

/// Generator id: dotted*4 + 2*row + col with 0-based spinor indices,
/// so ids 0..3 are M_a^b and 4..7 the dotted copies.
struct GeneratorId {
    bool dotted;
    std::uint8_t row, col;  // 0 or 1

    std::uint8_t id() const { return static_cast<std::uint8_t>((dotted ? 4 : 0) + 2 * row + col); }
    static GeneratorId from_id(std::uint8_t v) {
        return {v >= 4, static_cast<std::uint8_t>((v % 4) / 2), static_cast<std::uint8_t>(v % 2)};
    }
};

constexpr std::size_t kMaxWordLen = 8;

/// Ordered product of generators; the empty word is the algebra unit.
/// Total order: length first, then lexicographic on generator ids.
struct Word {
    std::uint8_t len = 0;
    std::array<std::uint8_t, kMaxWordLen> g{};

    static Word unit() { return {}; }
    static Word single(std::uint8_t gid) {
        Word w;
        w.len = 1;
        w.g[0] = gid;
        return w;
    }
    static Word pair(std::uint8_t a, std::uint8_t b) {
        Word w;
        w.len = 2;
        w.g[0] = a;
        w.g[1] = b;
        return w;
    }

    bool empty() const { return len == 0; }
    std::uint8_t operator[](std::size_t i) const { return g[i]; }

    Word appended(std::uint8_t gid) const {
        if (len >= kMaxWordLen) throw DegreeOverflow("word length cap exceeded");
        Word w = *this;
        w.g[w.len++] = gid;
        return w;
    }
    Word concat(const Word& o) const {
        if (len + o.len > kMaxWordLen) throw DegreeOverflow("word length cap exceeded");
        Word w = *this;
        for (std::uint8_t i = 0; i < o.len; ++i) w.g[w.len++] = o.g[i];
        return w;
    }
    Word subword(std::size_t from, std::size_t count) const {
        Word w;
        for (std::size_t i = 0; i < count; ++i) w.g[w.len++] = g[from + i];
        return w;
    }
    /// Replaces g[pos .. pos+removed) by r.
    Word spliced(std::size_t pos, std::size_t removed, const Word& r) const {
        Word w;
        for (std::size_t i = 0; i < pos; ++i) w.g[w.len++] = g[i];
        for (std::uint8_t i = 0; i < r.len; ++i) w.g[w.len++] = r.g[i];
        for (std::size_t i = pos + removed; i < len; ++i) w.g[w.len++] = g[i];
        return w;
    }
    Word reversed() const {
        Word w;
        w.len = len;
        for (std::uint8_t i = 0; i < len; ++i) w.g[i] = g[len - 1 - i];
        return w;
    }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.len != b.len) return a.len <=> b.len;
        for (std::uint8_t i = 0; i < a.len; ++i)
            if (a.g[i] != b.g[i]) return a.g[i] <=> b.g[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word& a, const Word& b) { return (a <=> b) == 0; }
};

/// Finite linear combination of words; coefficients below the drop threshold
/// are removed on insertion so noise cannot accumulate across reductions.
class AlgebraElement {
public:
    using Map = std::map<Word, Cplx>;

    AlgebraElement() = default;
    static AlgebraElement unit(Cplx c = Cplx(1)) {
        AlgebraElement e;
        e.terms_[Word::unit()] = std::move(c);
        return e;
    }
    static AlgebraElement generator(std::uint8_t gid, Cplx c = Cplx(1)) {
        AlgebraElement e;
        e.terms_[Word::single(gid)] = std::move(c);
        return e;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max<std::size_t>(d, w.len);
        return d;
    }

    void add(const Word& w, const Cplx& c, const Real& drop) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (c.abs2() > drop * drop) terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.abs2() <= drop * drop) terms_.erase(it);
        }
    }

    void add_scaled(const AlgebraElement& o, const Cplx& c, const Real& drop) {
        for (const auto& [w, v] : o.terms_) add(w, v * c, drop);
    }

    AlgebraElement scaled(const Cplx& c) const {
        AlgebraElement out;
        for (const auto& [w, v] : terms_) out.terms_[w] = v * c;
        return out;
    }

    friend AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b, const Real& drop) {
        AlgebraElement out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add(wa.concat(wb), ca * cb, drop);
        return out;
    }

    Real max_abs() const {
        Real m(0);
        for (const auto& [w, c] : terms_) {
            Real v = c.abs();
            if (v > m) m = v;
        }
        return m;
    }

    Cplx coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Cplx(0) : it->second;
    }

private:
    Map terms_;
};

/// Element of A (x) A as a finite combination of word pairs.
struct TensorSquare {
    std::map<std::pair<Word, Word>, Cplx> terms;

    void add(const Word& a, const Word& b, const Cplx& c, const Real& drop) {
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (c.abs2() > drop * drop) terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.abs2() <= drop * drop) terms.erase(it);
        }
    }
    Real max_abs() const {
        Real m(0);
        for (const auto& [k, c] : terms) {
            Real v = c.abs();
            if (v > m) m = v;
        }
        return m;
    }
};

}  // namespace qlorentz
