#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/fpgroups.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace pwf::fpg {

namespace {

constexpr std::int32_t kUndef = -1;
constexpr std::size_t kMaxDeductions = 1u << 16;

int column_of(int code) { return code >= 0 ? 2 * code : 2 * (-code - 1) + 1; }

int inv(int col) { return col ^ 1; }

class Enumerator {
public:
    Enumerator(const Presentation& p, std::size_t max_cosets)
        : ncols_(static_cast<int>(2 * p.generators.size())), max_(max_cosets) {
        for (const Word& w : p.relators) {
            if (w.empty()) continue;
            std::vector<int> cols;
            for (int code : w.expanded()) cols.push_back(column_of(code));
            rels_.push_back(std::move(cols));
        }
        // Short relators first: they close cosets earliest.
        std::stable_sort(rels_.begin(), rels_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });

        conj_.assign(static_cast<std::size_t>(ncols_), {});
        std::set<std::vector<int>> seen;
        for (const auto& r : rels_) {
            std::vector<int> ri(r.rbegin(), r.rend());
            for (int& c : ri) c = inv(c);
            for (const std::vector<int>* w : {&r, static_cast<const std::vector<int>*>(&ri)}) {
                const std::size_t n = w->size();
                for (std::size_t s = 0; s < n; ++s) {
                    std::vector<int> rot;
                    rot.reserve(n);
                    for (std::size_t t = 0; t < n; ++t) rot.push_back((*w)[(s + t) % n]);
                    if (seen.insert(rot).second) conj_[static_cast<std::size_t>(rot.front())].push_back(rot);
                }
            }
        }
    }

    EnumResult run() {
        EnumResult res;
        res.limit = max_;
        if (!new_coset()) {
            res.cosets_used = defined_;
            return res;
        }
        for (std::int32_t a = 0; a < static_cast<std::int32_t>(parent_.size()); ++a) {
            if (!live(a)) continue;
            for (const auto& r : rels_) {
                scan_and_fill(a, r);
                process_deductions();
                if (limit_hit_ || !live(a)) break;
            }
            if (limit_hit_) break;
            if (!live(a)) continue;
            for (int x = 0; x < ncols_; ++x) {
                if (entry(a, x) != kUndef) continue;
                if (!define(a, x)) break;
            }
            process_deductions();
            if (limit_hit_) break;
        }
        res.cosets_used = defined_;
        if (limit_hit_) return res;
        res.status = EnumResult::Status::Finite;
        res.order = live_;
        return res;
    }

private:
    std::int32_t& entry(std::int32_t c, int x) {
        return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(x)];
    }
    bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

    bool new_coset() {
        if (defined_ >= max_) {
            limit_hit_ = true;
            return false;
        }
        auto c = static_cast<std::int32_t>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + static_cast<std::size_t>(ncols_), kUndef);
        ++defined_;
        ++live_;
        return true;
    }

    bool define(std::int32_t a, int x) {
        if (!new_coset()) return false;
        std::int32_t b = static_cast<std::int32_t>(parent_.size()) - 1;
        entry(a, x) = b;
        entry(b, inv(x)) = a;
        push_deduction(a, x);
        return true;
    }

    void push_deduction(std::int32_t a, int x) {
        if (deductions_.size() < kMaxDeductions) deductions_.emplace_back(a, x);
    }

    void scan_and_fill(std::int32_t a, const std::vector<int>& w) {
        std::int32_t f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        for (;;) {
            while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndef) f = entry(f, w[static_cast<std::size_t>(i++)]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) != kUndef)
                b = entry(b, inv(w[static_cast<std::size_t>(j--)]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                int x = w[static_cast<std::size_t>(i)];
                entry(f, x) = b;
                entry(b, inv(x)) = f;
                push_deduction(f, x);
                return;
            }
            if (!define(f, w[static_cast<std::size_t>(i)])) return;
        }
    }

    void scan(std::int32_t a, const std::vector<int>& w) {
        std::int32_t f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndef) f = entry(f, w[static_cast<std::size_t>(i++)]);
        if (i > j) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) != kUndef)
            b = entry(b, inv(w[static_cast<std::size_t>(j--)]));
        if (j < i) {
            coincidence(f, b);
        } else if (i == j) {
            int x = w[static_cast<std::size_t>(i)];
            entry(f, x) = b;
            entry(b, inv(x)) = f;
            push_deduction(f, x);
        }
    }

    void process_deductions() {
        while (!deductions_.empty() && !limit_hit_) {
            auto [a, x] = deductions_.back();
            deductions_.pop_back();
            if (!live(a)) continue;
            for (const auto& w : conj_[static_cast<std::size_t>(x)]) {
                scan(a, w);
                if (!live(a)) break;
            }
            if (!live(a)) continue;
            std::int32_t b = entry(a, x);
            if (b == kUndef || !live(b)) continue;
            for (const auto& w : conj_[static_cast<std::size_t>(inv(x))]) {
                scan(b, w);
                if (!live(b)) break;
            }
        }
    }

    std::int32_t rep(std::int32_t c) {
        std::int32_t r = c;
        while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
        while (parent_[static_cast<std::size_t>(c)] != r) {
            std::int32_t next = parent_[static_cast<std::size_t>(c)];
            parent_[static_cast<std::size_t>(c)] = r;
            c = next;
        }
        return r;
    }

    void merge(std::int32_t k, std::int32_t l) {
        std::int32_t p = rep(k), q = rep(l);
        if (p == q) return;
        std::int32_t lo = std::min(p, q), hi = std::max(p, q);
        parent_[static_cast<std::size_t>(hi)] = lo;
        queue_.push_back(hi);
        --live_;
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            std::int32_t g = queue_[qi];
            for (int x = 0; x < ncols_; ++x) {
                std::int32_t d = entry(g, x);
                if (d == kUndef) continue;
                entry(d, inv(x)) = kUndef;
                std::int32_t mu = rep(g), nu = rep(d);
                if (entry(mu, x) != kUndef) {
                    merge(nu, entry(mu, x));
                } else if (entry(nu, inv(x)) != kUndef) {
                    merge(mu, entry(nu, inv(x)));
                } else {
                    entry(mu, x) = nu;
                    entry(nu, inv(x)) = mu;
                    push_deduction(mu, x);
                }
            }
        }
        queue_.clear();
    }

    int ncols_;
    std::size_t max_;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<std::vector<int>>> conj_;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> parent_;
    std::vector<std::pair<std::int32_t, int>> deductions_;
    std::vector<std::int32_t> queue_;
    std::size_t defined_ = 0;
    std::size_t live_ = 0;
    bool limit_hit_ = false;
};

}  // namespace

EnumResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
    if (max_cosets < 1) throw PreconditionError("todd_coxeter: max_cosets must be >= 1");
    if (max_cosets > static_cast<std::size_t>(INT32_MAX)) max_cosets = static_cast<std::size_t>(INT32_MAX);
    return Enumerator(p, max_cosets).run();
}

}  // namespace pwf::fpg
