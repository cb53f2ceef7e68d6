#include "logcave/seq.hpp"

#include <algorithm>

namespace logcave {

namespace {
const QField kZero{};
const QField kOne{Rat(1)};
}  // namespace

Seq::Seq(std::vector<QField> values) : v_(std::move(values)), d_(0) {
    if (v_.empty()) throw error("empty sequence");
    for (const QField& x : v_) {
        if (x.radicand() == 0) continue;
        if (d_ == 0) {
            d_ = x.radicand();
        } else if (d_ != x.radicand()) {
            throw mixed_field_error("sequence entries from different quadratic extensions");
        }
    }
}

const QField& Seq::at(long k) const {
    if (k < 0 || k >= size()) return kZero;
    return v_[static_cast<size_t>(k)];
}

bool Seq::nonnegative() const { return !first_negative().has_value(); }

std::optional<long> Seq::first_negative() const {
    for (long k = 0; k < size(); ++k) {
        if (qf_sign(v_[static_cast<size_t>(k)]) < 0) return k;
    }
    return std::nullopt;
}

Seq materialize(const SymSeq& s) {
    if (s.core.empty()) throw error("empty symmetric core");
    for (const QField& x : s.core) {
        if (qf_sign(x) <= 0) throw error("symmetric core entries must be positive");
    }
    std::vector<QField> v;
    const size_t n1 = s.core.size();
    v.reserve(2 * n1 + 2);
    v.push_back(kOne);
    v.insert(v.end(), s.core.begin(), s.core.end());
    if (s.parity == Parity::even) {
        v.insert(v.end(), s.core.rbegin(), s.core.rend());
    } else {
        v.insert(v.end(), s.core.rbegin() + 1, s.core.rend());
    }
    v.push_back(kOne);
    return Seq(std::move(v));
}

SymSeq extract_core(const Seq& s, Parity parity) {
    const long m = s.size();
    const long min_len = parity == Parity::even ? 4 : 3;
    if (m < min_len || (m - min_len) % 2 != 0) {
        throw error("sequence length does not match the requested parity");
    }
    if (!(s.at(0) == kOne) || !(s.at(m - 1) == kOne)) {
        throw error("sequence is not 1-bracketed");
    }
    for (long k = 0; k < m / 2; ++k) {
        if (!(s.at(k) == s.at(m - 1 - k))) throw error("sequence is not palindromic");
    }
    const long n = parity == Parity::even ? (m - 4) / 2 : (m - 3) / 2;
    std::vector<QField> core(s.values().begin() + 1, s.values().begin() + 2 + n);
    SymSeq out{std::move(core), parity};
    for (const QField& x : out.core) {
        if (qf_sign(x) <= 0) throw error("symmetric core entries must be positive");
    }
    return out;
}

void validate_r(const QField& r, RPolicy policy) {
    if (qf_sign(r) <= 0) throw r_not_supported_error("r must be positive");
    if (policy == RPolicy::standard && qf_cmp(r, kOne) < 0) {
        throw r_not_supported_error(
            "r below 1 needs the allow_below_one policy");
    }
}

Seq apply_lr(const Seq& s, const QField& r, RPolicy policy) {
    validate_r(r, policy);
    std::vector<QField> out;
    out.reserve(static_cast<size_t>(s.size()));
    // outside the stored range both a_k and a_{k-1} a_{k+1} vanish, so the
    // image's support never widens
    for (long k = 0; k < s.size(); ++k) {
        const QField& a = s.at(k);
        out.push_back(a * a - r * (s.at(k - 1) * s.at(k + 1)));
    }
    return Seq(std::move(out));
}

Seq iterate_lr(const Seq& s, const QField& r, long folds, RPolicy policy) {
    if (folds < 0) throw error("negative fold count");
    Seq cur = s;
    for (long i = 0; i < folds; ++i) cur = apply_lr(cur, r, policy);
    return cur;
}

LcVerdict is_r_factor_lc(const Seq& s, const QField& r, RPolicy policy) {
    validate_r(r, policy);
    if (auto neg = s.first_negative()) {
        throw error("factor-r log-concavity is defined for nonnegative sequences "
                    "(negative entry at index " + std::to_string(*neg) + ")");
    }
    for (long k = 0; k < s.size(); ++k) {
        const QField& a = s.at(k);
        QField lhs = a * a;
        QField rhs = r * (s.at(k - 1) * s.at(k + 1));
        if (qf_cmp(lhs, rhs) < 0) return {false, k};
    }
    return {true, -1};
}

FoldVerdict is_ifold_lc(const Seq& s, const QField& r, long folds, RPolicy policy) {
    if (folds < 1) throw error("fold count must be at least 1");
    validate_r(r, policy);
    Seq cur = s;
    for (long j = 1; j <= folds; ++j) {
        cur = apply_lr(cur, r, policy);
        if (auto neg = cur.first_negative()) return {false, j, *neg};
    }
    return {true, -1, -1};
}

}  // namespace logcave
