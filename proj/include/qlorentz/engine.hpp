#pragma once

#include "qlorentz/hopf.hpp"
#include "qlorentz/linalg.hpp"
#include "qlorentz/rmatrix.hpp"
#include "qlorentz/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace qlorentz {

/// The defining degree-2 relations of the algebra: exchange relations for
/// both signs in the undotted, dotted and mixed sectors, plus the
/// unimodularity conditions (inhomogeneous, degree 2 -> 0).
inline std::vector<AlgebraElement> relation_vectors(const ParameterSet& p, const SpinorMetric& m,
                                                    const RMatrixPair& rm) {
    const Real drop = p.tolerance * p.tolerance;
    std::vector<AlgebraElement> rels;
    auto gid = [](bool dotted, std::uint8_t row, std::uint8_t col) {
        return GeneratorId{dotted, row, col}.id();
    };

    for (bool dotted : {false, true}) {
        const Tensor& L = dotted ? m.eps_lower_dotted : m.eps_lower;
        const Tensor& U = dotted ? m.eps_upper_dotted : m.eps_upper;
        for (int s : {+1, -1}) {
            const Tensor& R = dotted ? rm.r_dot[sidx(s)] : rm.r[sidx(s)];
            for (std::uint8_t a = 0; a < 2; ++a)
                for (std::uint8_t b = 0; b < 2; ++b)
                    for (std::uint8_t c = 0; c < 2; ++c)
                        for (std::uint8_t d = 0; d < 2; ++d) {
                            AlgebraElement v;
                            for (std::uint8_t sg = 0; sg < 2; ++sg)
                                for (std::uint8_t rr = 0; rr < 2; ++rr) {
                                    v.add(Word::pair(gid(dotted, c, sg), gid(dotted, d, rr)),
                                          R.at({a, b, sg, rr}), drop);
                                    v.add(Word::pair(gid(dotted, sg, a), gid(dotted, rr, b)),
                                          -R.at({sg, rr, c, d}), drop);
                                }
                            if (!v.empty()) rels.push_back(std::move(v));
                        }
        }
        for (std::uint8_t c = 0; c < 2; ++c)
            for (std::uint8_t d = 0; d < 2; ++d) {
                AlgebraElement v;
                for (std::uint8_t a = 0; a < 2; ++a)
                    for (std::uint8_t b = 0; b < 2; ++b)
                        v.add(Word::pair(gid(dotted, c, a), gid(dotted, d, b)), L.at({a, b}), drop);
                v.add(Word::unit(), -L.at({c, d}), drop);
                rels.push_back(std::move(v));
            }
        for (std::uint8_t a = 0; a < 2; ++a)
            for (std::uint8_t b = 0; b < 2; ++b) {
                AlgebraElement v;
                for (std::uint8_t c = 0; c < 2; ++c)
                    for (std::uint8_t d = 0; d < 2; ++d)
                        v.add(Word::pair(gid(dotted, c, a), gid(dotted, d, b)), U.at({c, d}), drop);
                v.add(Word::unit(), -U.at({a, b}), drop);
                rels.push_back(std::move(v));
            }
    }

    // mixed exchange, both signs: M_a^g M_{sd}^{dd} R^{(s) rd b}_{g dd} =
    //                             R^{(s) dd g}_{a sd} M_{dd}^{rd} M_g^b
    for (int s : {+1, -1}) {
        const Tensor& R1 = rm.mixed1[sidx(s)];
        for (std::uint8_t al = 0; al < 2; ++al)
            for (std::uint8_t sd = 0; sd < 2; ++sd)
                for (std::uint8_t rd = 0; rd < 2; ++rd)
                    for (std::uint8_t b = 0; b < 2; ++b) {
                        AlgebraElement v;
                        for (std::uint8_t g = 0; g < 2; ++g)
                            for (std::uint8_t dd = 0; dd < 2; ++dd) {
                                v.add(Word::pair(gid(false, al, g), gid(true, sd, dd)),
                                      R1.at({rd, b, g, dd}), drop);
                                v.add(Word::pair(gid(true, dd, rd), gid(false, g, b)),
                                      -R1.at({dd, g, al, sd}), drop);
                            }
                        if (!v.empty()) rels.push_back(std::move(v));
                    }
    }
    return rels;
}

struct EngineStatus {
    bool fallback_engaged = false;
    Real diamond_initial{0};
    Real diamond_final{0};
    Real diamond_degree4{0};
    int new_rules[5] = {0, 0, 0, 0, 0};  // indexed by degree
    std::size_t canonical_dim[5] = {1, 8, 0, 0, 0};
};

/// Degree-filtered reduction of algebra elements modulo the relation ideal.
///
/// A pairwise rewrite table is row-reduced from the relation instances with
/// reverse-lexicographic column order, so every rule rewrites its leading
/// word into strictly smaller words in the (length, lex) word order; leftmost
/// reduction therefore terminates. When the degree-3 diamond check fails the
/// engine falls back to degree-filtered completion: all rule consequences up
/// to max_degree are reduced and the surviving residues row-reduced into new
/// rules, swept to a fixpoint.
class NormalFormEngine {
public:
    NormalFormEngine(const ParameterSet& p, const SpinorMetric& m, const RMatrixPair& rm,
                     std::size_t max_degree = 4)
        : tol_(p.tolerance), drop_(p.tolerance * p.tolerance), max_degree_(max_degree) {
        if (max_degree_ < 2 || max_degree_ > kMaxWordLen)
            throw ConfigError("max_degree out of range");
        relations_ = relation_vectors(p, m, rm);
        build_pair_rules();
        status_.diamond_initial = diamond(3);
        if (status_.diamond_initial > tol_) {
            status_.fallback_engaged = true;
            complete();
        }
        status_.diamond_final = diamond(3);
        if (max_degree_ >= 4) status_.diamond_degree4 = diamond(4);
        if (status_.diamond_final > tol_ || (max_degree_ >= 4 && status_.diamond_degree4 > tol_))
            throw ConfluenceFailure("diamond residual persists after completion");
        for (std::size_t d = 2; d <= max_degree_ && d <= 4; ++d)
            status_.canonical_dim[d] = canonical_words(d).size();
    }

    const EngineStatus& status() const { return status_; }
    std::size_t max_degree() const { return max_degree_; }
    const std::vector<AlgebraElement>& relations() const { return relations_; }

    bool is_canonical(const Word& w) const {
        for (std::size_t i = 0; i < w.len; ++i)
            for (std::size_t ln = 2; ln <= 4 && i + ln <= w.len; ++ln)
                if (rules_.count(w.subword(i, ln))) return false;
        return true;
    }

    const AlgebraElement& nf_word(const Word& w) const {
        if (w.len > max_degree_) throw DegreeOverflow("word exceeds max_degree");
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        AlgebraElement res;
        bool rewritten = false;
        for (std::size_t i = 0; i < w.len && !rewritten; ++i)
            for (std::size_t ln = 2; ln <= 4 && i + ln <= w.len; ++ln) {
                auto rit = rules_.find(w.subword(i, ln));
                if (rit == rules_.end()) continue;
                for (const auto& [rw, c] : rit->second.terms()) {
                    const AlgebraElement& sub = nf_word(w.spliced(i, ln, rw));
                    res.add_scaled(sub, c, drop_);
                }
                rewritten = true;
                break;
            }
        if (!rewritten) res.add(w, Cplx(1), drop_);
        return memo_.emplace(w, std::move(res)).first->second;
    }

    AlgebraElement normal_form(const AlgebraElement& e) const {
        AlgebraElement out;
        for (const auto& [w, c] : e.terms()) out.add_scaled(nf_word(w), c, drop_);
        return out;
    }

    Real reduce_residual(const AlgebraElement& e) const { return normal_form(e).max_abs(); }

    /// Two-route reduction discrepancy over all words of the given degree:
    /// expand the leftmost window first vs the next window first, then fully
    /// normalize both.
    Real diamond(std::size_t deg) const {
        Real worst(0);
        std::vector<std::uint8_t> letters(deg, 0);
        while (true) {
            Word w;
            for (auto g : letters) w = w.appended(g);
            AlgebraElement a = route(w, 0), b = route(w, 1);
            a.add_scaled(b, Cplx(-1), drop_);
            Real v = a.max_abs();
            if (v > worst) worst = v;
            std::size_t i = 0;
            while (i < deg && ++letters[i] == 8) letters[i++] = 0;
            if (i == deg) break;
        }
        return worst;
    }

    std::vector<Word> canonical_words(std::size_t deg) const {
        std::vector<Word> out;
        Word w;
        std::function<void(Word&)> rec = [&](Word& cur) {
            if (cur.len == deg) {
                out.push_back(cur);
                return;
            }
            for (std::uint8_t g = 0; g < 8; ++g) {
                Word nxt = cur.appended(g);
                bool ok = true;
                for (std::size_t ln = 2; ln <= 4 && ln <= nxt.len; ++ln)
                    if (rules_.count(nxt.subword(nxt.len - ln, ln))) {
                        ok = false;
                        break;
                    }
                if (ok) rec(nxt);
            }
        };
        rec(w);
        return out;
    }

private:
    AlgebraElement route(const Word& w, std::size_t pos) const {
        for (std::size_t ln = 2; ln <= 4 && pos + ln <= w.len; ++ln) {
            auto rit = rules_.find(w.subword(pos, ln));
            if (rit == rules_.end()) continue;
            AlgebraElement out;
            for (const auto& [rw, c] : rit->second.terms())
                out.add_scaled(nf_word(w.spliced(pos, ln, rw)), c, drop_);
            return out;
        }
        return nf_word(w);
    }

    /// Row-reduces the given ideal vectors over the word columns sorted
    /// descending in the word order (unit column last) and installs a rule
    /// for every pivot column. Returns the number of new rules.
    int reduce_and_install(const std::vector<AlgebraElement>& rows) {
        if (rows.empty()) return 0;
        std::map<Word, std::size_t, std::greater<Word>> colidx;
        for (const auto& v : rows)
            for (const auto& [w, c] : v.terms()) colidx.emplace(w, 0);
        std::vector<Word> cols;
        cols.reserve(colidx.size());
        for (auto& [w, idx] : colidx) {
            idx = cols.size();
            cols.push_back(w);
        }
        Mat M(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Real mx = rows[i].max_abs();
            for (const auto& [w, c] : rows[i].terms()) M(i, colidx[w]) += c * (1 / mx);
        }
        std::vector<bool> used(rows.size(), false);
        int installed = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t best = rows.size();
            Real bestv(0);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (used[i]) continue;
                Real v = M(i, j).abs2();
                if (v > bestv) {
                    bestv = v;
                    best = i;
                }
            }
            if (best == rows.size() || bestv <= tol_ * tol_) continue;
            if (cols[j].empty())
                throw RankDeficiency("relations force a scalar identity: inconsistent parameter point");
            Cplx piv = M(best, j);
            for (std::size_t k = j; k < cols.size(); ++k) M(best, k) = M(best, k) / piv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best) continue;
                Cplx f = M(i, j);
                if (f.re == 0 && f.im == 0) continue;
                for (std::size_t k = j; k < cols.size(); ++k) M(i, k) -= f * M(best, k);
            }
            used[best] = true;
            AlgebraElement rule;
            for (std::size_t k = j + 1; k < cols.size(); ++k) {
                Cplx v = -M(best, k);
                if (v.abs2() > drop_ * drop_) rule.add(cols[k], v, drop_);
            }
            rules_[cols[j]] = std::move(rule);
            ++installed;
        }
        return installed;
    }

    void build_pair_rules() {
        // sector split keeps the three independent systems small
        auto sector = [](const AlgebraElement& v) {
            for (const auto& [w, c] : v.terms())
                if (!w.empty()) return int(w[0] >= 4) * 2 + int(w[1] >= 4);
            return -1;
        };
        std::map<int, std::vector<AlgebraElement>> bysec;
        for (const auto& v : relations_) {
            int s = sector(v);
            // mixed relations touch both (u,d) and (d,u) words: merge those sectors
            if (s == 1 || s == 2) s = 1;
            bysec[s].push_back(v);
        }
        for (auto& [s, rows] : bysec) status_.new_rules[2] += reduce_and_install(rows);

        // dotted letters must always commute past undotted ones, or the mixed
        // relation system lost rank at this parameter point
        for (std::uint8_t a = 4; a < 8; ++a)
            for (std::uint8_t b = 0; b < 4; ++b)
                if (!rules_.count(Word::pair(a, b)))
                    throw RankDeficiency("mixed exchange system cannot reorder a dotted/undotted pair");
    }

    void complete() {
        while (true) {
            int added = 0;
            for (std::size_t deg = 3; deg <= max_degree_; ++deg) {
                std::vector<AlgebraElement> residues;
                std::vector<std::pair<Word, AlgebraElement>> snapshot(rules_.begin(), rules_.end());
                for (const auto& [lhs, rhs] : snapshot) {
                    if (lhs.len >= deg) continue;
                    std::size_t extra = deg - lhs.len;
                    for (std::size_t pre_len = 0; pre_len <= extra; ++pre_len)
                        embed_rule(lhs, rhs, pre_len, extra - pre_len, residues);
                }
                int n = reduce_and_install(residues);
                status_.new_rules[deg] += n;
                added += n;
                if (n > 0) memo_.clear();
            }
            if (added == 0) break;
        }
    }

    void embed_rule(const Word& lhs, const AlgebraElement& rhs, std::size_t pre_len,
                    std::size_t suf_len, std::vector<AlgebraElement>& residues) {
        const std::size_t npre = std::size_t(1) << (3 * pre_len);
        const std::size_t nsuf = std::size_t(1) << (3 * suf_len);
        for (std::size_t pi = 0; pi < npre; ++pi)
            for (std::size_t si = 0; si < nsuf; ++si) {
                Word pw, sw;
                for (std::size_t k = 0; k < pre_len; ++k) pw = pw.appended((pi >> (3 * k)) & 7);
                for (std::size_t k = 0; k < suf_len; ++k) sw = sw.appended((si >> (3 * k)) & 7);
                AlgebraElement vec;
                vec.add(pw.concat(lhs).concat(sw), Cplx(1), drop_);
                for (const auto& [rw, c] : rhs.terms()) vec.add(pw.concat(rw).concat(sw), -c, drop_);
                AlgebraElement red = normal_form(vec);
                if (red.max_abs() > tol_) residues.push_back(std::move(red));
            }
    }

    Real tol_, drop_;
    std::size_t max_degree_;
    std::vector<AlgebraElement> relations_;
    std::map<Word, AlgebraElement> rules_;
    mutable std::map<Word, AlgebraElement> memo_;
    EngineStatus status_;
};

}  // namespace qlorentz
