#include "liewb/enveloping.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

namespace liewb {

// ---- PbwContext -----------------------------------------------------------

std::shared_ptr<const PbwContext> PbwContext::make(const LieAlgebra& L) {
    auto ctx = std::make_shared<PbwContext>();
    ctx->names_ = L.names();
    ctx->params_ = L.params();
    std::vector<std::string> image_names = L.names();
    std::vector<std::string> param_names;
    for (size_t i = 0; i < L.params().size(); ++i) {
        image_names.push_back(L.params().name(i));
        param_names.push_back(L.params().name(i));
    }
    ctx->image_vars_ = VarSet::make(image_names, param_names);
    int n = int(L.dim());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < a; ++b) {
            auto entries = L.bracket_basis(a, b);
            if (entries.empty()) continue;
            LinPoly lp;
            lp.constant = Polynomial(L.params());
            for (auto& [k, c] : entries) lp.linear.emplace_back(k, c);
            ctx->table_.emplace(std::make_pair(a, b), std::move(lp));
        }
    }
    return ctx;
}

std::shared_ptr<const PbwContext>
PbwContext::make_evaluated(const LieAlgebra& L, const std::string& central_name) {
    int z = L.index_of(central_name);
    if (z < 0) throw LieError("no generator named " + central_name);
    for (size_t j = 0; j < L.dim(); ++j)
        if (!L.bracket_basis(z, int(j)).empty())
            throw LieError(central_name + " is not central");
    auto ctx = std::make_shared<PbwContext>();
    ctx->params_ = L.params();
    std::vector<int> remap(L.dim(), -1);
    for (size_t i = 0; i < L.dim(); ++i) {
        if (int(i) == z) continue;
        remap[i] = int(ctx->names_.size());
        ctx->names_.push_back(L.names()[i]);
    }
    std::vector<std::string> image_names = ctx->names_;
    std::vector<std::string> param_names;
    for (size_t i = 0; i < L.params().size(); ++i) {
        image_names.push_back(L.params().name(i));
        param_names.push_back(L.params().name(i));
    }
    ctx->image_vars_ = VarSet::make(image_names, param_names);
    int n = int(L.dim());
    for (int a = 0; a < n; ++a) {
        if (a == z) continue;
        for (int b = 0; b < a; ++b) {
            if (b == z) continue;
            auto entries = L.bracket_basis(a, b);
            if (entries.empty()) continue;
            LinPoly lp;
            lp.constant = Polynomial(L.params());
            for (auto& [k, c] : entries) {
                if (k == z)
                    lp.constant += c;
                else
                    lp.linear.emplace_back(remap[k], c);
            }
            std::sort(lp.linear.begin(), lp.linear.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            ctx->table_.emplace(std::make_pair(remap[a], remap[b]), std::move(lp));
        }
    }
    return ctx;
}

int PbwContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

LinPoly PbwContext::bracket(int a, int b) const {
    LinPoly out;
    out.constant = Polynomial(params_);
    if (a == b) return out;
    bool flip = a < b;
    auto it = table_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == table_.end()) return out;
    out = it->second;
    if (flip) {
        for (auto& [k, c] : out.linear) c = -c;
        out.constant = -out.constant;
    }
    return out;
}

// ---- NCPoly ----------------------------------------------------------------

NCPoly NCPoly::constant(PbwContextPtr ctx, const Rational& c) {
    return constant(ctx, Polynomial::constant(ctx->params(), c));
}

NCPoly NCPoly::constant(PbwContextPtr ctx, const Polynomial& c) {
    NCPoly p(ctx);
    Monomial m;
    m.e.assign(p.ctx_->dim(), 0);
    p.add_term(m, c);
    return p;
}

NCPoly NCPoly::generator(PbwContextPtr ctx, int i) {
    NCPoly p(std::move(ctx));
    Monomial m;
    m.e.assign(p.ctx_->dim(), 0);
    m.e.at(i) = 1;
    p.add_term(m, Polynomial::constant(p.ctx_->params(), Rational(1)));
    return p;
}

NCPoly NCPoly::monomial(PbwContextPtr ctx, const Monomial& m, const Polynomial& c) {
    NCPoly p(std::move(ctx));
    p.add_term(m, c);
    return p;
}

long NCPoly::degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void NCPoly::add_term(const Monomial& m, const Polynomial& c) {
    if (c.is_zero()) return;
    if (m.e.size() != ctx_->dim())
        throw LieError("PBW monomial arity mismatch");
    for (int e : m.e)
        if (e < 0) throw LieError("negative PBW exponent");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    if (ctx_ != o.ctx_) throw LieError("enveloping-algebra mismatch");
    NCPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPoly NCPoly::scale(const Polynomial& c) const {
    NCPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, p] : terms_) r.add_term(m, p * c);
    return r;
}

NCPoly NCPoly::scale(const Rational& c) const {
    return scale(Polynomial::constant(ctx_->params(), c));
}

namespace {

std::vector<int> ascending_word(const Monomial& m) {
    std::vector<int> w;
    for (size_t i = 0; i < m.e.size(); ++i)
        for (int k = 0; k < m.e[i]; ++k) w.push_back(int(i));
    return w;
}

Monomial word_monomial(size_t n, const std::vector<int>& sorted_word) {
    Monomial m;
    m.e.assign(n, 0);
    for (int g : sorted_word) m.e[g] += 1;
    return m;
}

} // namespace

NCPoly normal_order_word(const PbwContextPtr& ctx, const std::vector<int>& word,
                         const Polynomial& coeff) {
    NCPoly out(ctx);
    if (coeff.is_zero()) return out;
    std::vector<std::pair<Polynomial, std::vector<int>>> stack;
    stack.emplace_back(coeff, word);
    while (!stack.empty()) {
        auto [c, w] = std::move(stack.back());
        stack.pop_back();
        size_t bad = w.size();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                bad = i;
                break;
            }
        }
        if (bad == w.size()) {
            out.add_term(word_monomial(ctx->dim(), w), c);
            continue;
        }
        // Y_a Y_b = Y_b Y_a + [Y_a, Y_b] at positions (bad, bad+1), a > b
        int a = w[bad], b = w[bad + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[bad], swapped[bad + 1]);
        stack.emplace_back(c, std::move(swapped));
        LinPoly br = ctx->bracket(a, b);
        for (const auto& [k, ck] : br.linear) {
            std::vector<int> repl;
            repl.reserve(w.size() - 1);
            repl.insert(repl.end(), w.begin(), w.begin() + bad);
            repl.push_back(k);
            repl.insert(repl.end(), w.begin() + bad + 2, w.end());
            stack.emplace_back(c * ck, std::move(repl));
        }
        if (!br.constant.is_zero()) {
            std::vector<int> dropped;
            dropped.reserve(w.size() - 2);
            dropped.insert(dropped.end(), w.begin(), w.begin() + bad);
            dropped.insert(dropped.end(), w.begin() + bad + 2, w.end());
            stack.emplace_back(c * br.constant, std::move(dropped));
        }
    }
    return out;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    if (ctx_ != o.ctx_) throw LieError("enveloping-algebra mismatch");
    NCPoly out(ctx_);
    for (const auto& [ma, ca] : terms_) {
        std::vector<int> wa = ascending_word(ma);
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> w = wa;
            for (int g : ascending_word(mb)) w.push_back(g);
            NCPoly piece = normal_order_word(ctx_, w, ca * cb);
            for (const auto& [m, c] : piece.terms()) out.add_term(m, c);
        }
    }
    return out;
}

NCPoly NCPoly::pow(unsigned n) const {
    NCPoly r = NCPoly::constant(ctx_, Rational(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

NCPoly NCPoly::ad(int i) const {
    NCPoly out(ctx_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> w = ascending_word(m);
        // Leibniz over letter positions
        for (size_t pos = 0; pos < w.size(); ++pos) {
            LinPoly br = ctx_->bracket(i, w[pos]);
            for (const auto& [k, ck] : br.linear) {
                std::vector<int> repl = w;
                repl[pos] = k;
                NCPoly piece = normal_order_word(ctx_, repl, c * ck);
                for (const auto& [mm, cc] : piece.terms()) out.add_term(mm, cc);
            }
            if (!br.constant.is_zero()) {
                std::vector<int> dropped;
                dropped.reserve(w.size() - 1);
                for (size_t q = 0; q < w.size(); ++q)
                    if (q != pos) dropped.push_back(w[q]);
                NCPoly piece = normal_order_word(ctx_, dropped, c * br.constant);
                for (const auto& [mm, cc] : piece.terms()) out.add_term(mm, cc);
            }
        }
    }
    return out;
}

NCPoly NCPoly::commutator(const NCPoly& o) const {
    return *this * o - o * *this;
}

Polynomial NCPoly::commutative_image() const {
    const VarSet& iv = ctx_->image_vars();
    Polynomial out(iv);
    size_t n = ctx_->dim();
    for (const auto& [m, c] : terms_) {
        for (const auto& [pm, pc] : c.terms()) {
            Monomial t;
            t.e.assign(iv.size(), 0);
            for (size_t i = 0; i < n; ++i) t.e[i] = m.e[i];
            for (size_t i = 0; i < pm.e.size(); ++i) t.e[n + i] = pm.e[i];
            out.add_term(t, pc);
        }
    }
    return out;
}

// ---- symmetrization -------------------------------------------------------

NCPoly symmetrize(const PbwContextPtr& ctx, const Polynomial& p,
                  size_t max_arrangements) {
    // variables must match the generators by name (prefix of image_vars)
    std::vector<int> var_to_gen(p.vars().size(), -1);
    for (size_t v = 0; v < p.vars().size(); ++v) {
        int g = ctx->index_of(p.vars().name(v));
        if (g < 0)
            throw LieError("variable " + p.vars().name(v) + " does not name a generator");
        var_to_gen[v] = g;
    }
    NCPoly out(ctx);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> word;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] < 0) throw LieError("negative power under symmetrization");
            for (int k = 0; k < m.e[v]; ++k) word.push_back(var_to_gen[v]);
        }
        // distinct arrangements = multinomial(|word|; multiplicities)
        Rational count = rat_factorial(static_cast<unsigned long>(word.size()));
        for (size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v] > 1)
                count /= rat_factorial(static_cast<unsigned long>(m.e[v]));
        if (count > Rational(static_cast<unsigned long>(max_arrangements)))
            throw ResourceLimit("symmetrization arrangement cap exceeded (" +
                                std::to_string(max_arrangements) + ")");
        std::sort(word.begin(), word.end());
        if (word.empty()) {
            out = out + NCPoly::constant(ctx, Polynomial::constant(ctx->params(), c));
            continue;
        }
        // average over distinct arrangements
        std::vector<std::vector<int>> arrangements;
        std::vector<int> w = word;
        do {
            arrangements.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        Rational weight = c / Rational(long(arrangements.size()));
        Polynomial wcoeff = Polynomial::constant(ctx->params(), weight);
        NCPoly acc(ctx);
        for (const auto& arr : arrangements) {
            NCPoly piece = normal_order_word(ctx, arr, wcoeff);
            acc = acc + piece;
        }
        out = out + acc;
    }
    return out;
}

std::vector<std::pair<int, NCPoly>> verify_central(const NCPoly& p) {
    std::vector<std::pair<int, NCPoly>> out;
    for (int i = 0; i < int(p.ctx()->dim()); ++i) {
        NCPoly c = p.ad(i);
        if (!c.is_zero()) out.emplace_back(i, std::move(c));
    }
    return out;
}

// ---- candidate enumeration and search --------------------------------------

std::vector<Monomial> enumerate_monomials(size_t nvars, int max_degree,
                                          const std::vector<int>& restrict_to,
                                          size_t cap) {
    std::vector<int> allowed = restrict_to;
    if (allowed.empty())
        for (size_t i = 0; i < nvars; ++i) allowed.push_back(int(i));
    std::vector<Monomial> out;
    Monomial base;
    base.e.assign(nvars, 0);
    // lexicographic composition enumeration per total degree
    std::function<void(int, size_t, Monomial&)> rec = [&](int remaining, size_t pos,
                                                          Monomial& acc) {
        if (out.size() > cap)
            throw ResourceLimit("candidate monomial cap exceeded (" +
                                std::to_string(cap) + ")");
        if (pos == allowed.size()) {
            if (remaining == 0) out.push_back(acc);
            return;
        }
        if (pos + 1 == allowed.size()) {
            acc.e[allowed[pos]] = remaining;
            out.push_back(acc);
            acc.e[allowed[pos]] = 0;
            if (out.size() > cap)
                throw ResourceLimit("candidate monomial cap exceeded (" +
                                    std::to_string(cap) + ")");
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            acc.e[allowed[pos]] = take;
            rec(remaining - take, pos + 1, acc);
        }
        acc.e[allowed[pos]] = 0;
    };
    for (int d = 0; d <= max_degree; ++d) rec(d, 0, base);
    return out;
}

namespace {

struct RowKey {
    int gen;
    Monomial mono;
    bool operator<(const RowKey& o) const {
        if (gen != o.gen) return gen < o.gen;
        return GrlexLess{}(mono, o.mono);
    }
};

} // namespace

CasimirSearch casimir_search(const PbwContextPtr& ctx, int max_degree,
                             const SearchFilters& filters, int jobs,
                             size_t max_monomials) {
    if (ctx->params().size() > 0)
        throw LieError("casimir search requires parameter-free structure constants");
    if (max_degree < 1) throw LieError("degree bound must be >= 1");

    CasimirSearch result;
    std::vector<Monomial> cands =
        enumerate_monomials(ctx->dim(), max_degree, filters.restrict_to, max_monomials);
    if (filters.weights) {
        const auto& w = *filters.weights;
        std::vector<Monomial> keep;
        for (auto& m : cands) {
            Rational total(0);
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i]) total += Rational(m.e[i]) * w[i];
            if (is_zero(total)) keep.push_back(std::move(m));
        }
        cands = std::move(keep);
    }
    result.candidates = cands;
    result.candidate_count = cands.size();

    // rows keyed by (generator, PBW monomial); entries transposed from
    // per-candidate ad actions
    std::map<RowKey, SparseRow> rows;
    int n = int(ctx->dim());
    auto process_range = [&](size_t begin, size_t end,
                             std::map<RowKey, SparseRow>& sink) {
        for (size_t col = begin; col < end; ++col) {
            NCPoly y = NCPoly::monomial(ctx, cands[col],
                                        Polynomial::constant(ctx->params(), Rational(1)));
            for (int i = 0; i < n; ++i) {
                NCPoly r = y.ad(i);
                for (const auto& [m, c] : r.terms())
                    sink[{i, m}].emplace_back(int(col), c.constant_value());
            }
        }
    };
    if (jobs <= 1 || cands.size() < 64) {
        process_range(0, cands.size(), rows);
    } else {
        size_t nw = size_t(jobs);
        std::vector<std::map<RowKey, SparseRow>> sinks(nw);
        std::vector<std::thread> pool;
        size_t chunk = (cands.size() + nw - 1) / nw;
        for (size_t t = 0; t < nw; ++t) {
            size_t b = t * chunk, e = std::min(cands.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e, t] { process_range(b, e, sinks[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& s : sinks)
            for (auto& [k, r] : s) {
                auto& dst = rows[k];
                dst.insert(dst.end(), r.begin(), r.end());
            }
    }

    RrefBasis rref(int(cands.size()));
    for (auto& [k, r] : rows) {
        result.equation_rows += 1;
        rref.insert(std::move(r));
    }
    result.equation_rank = size_t(rref.rank());

    for (const auto& v : rref.nullspace()) {
        NCPoly p(ctx);
        for (const auto& [col, c] : v)
            p.add_term(cands[col], Polynomial::constant(ctx->params(), c));
        if (!verify_central(p).empty())
            throw LieError("internal: nullspace element failed the central re-check");
        result.nullspace.push_back(std::move(p));
    }

    // greedy degree-ascending reduction to an algebraically independent set
    std::vector<size_t> order(result.nullspace.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return result.nullspace[a].degree() < result.nullspace[b].degree();
    });
    std::vector<NCPoly> chosen;
    for (size_t idx : order) {
        const NCPoly& cand = result.nullspace[idx];
        if (cand.degree() == 0) continue;
        std::vector<NCPoly> trial = chosen;
        trial.push_back(cand);
        if (algebraic_independence(trial).independent) chosen.push_back(cand);
    }
    result.reduced = std::move(chosen);
    return result;
}

IndependenceVerdict algebraic_independence(const std::vector<NCPoly>& ps,
                                           uint64_t seed) {
    IndependenceVerdict out;
    if (ps.empty()) {
        out.independent = true;
        out.verdict = "independent (empty set)";
        out.rank = 0;
        return out;
    }
    const auto& ctx = ps.front().ctx();
    size_t nvars = ctx->dim();
    std::vector<std::vector<Polynomial>> grads;
    for (const auto& p : ps) {
        Polynomial img = p.commutative_image();
        std::vector<Polynomial> g;
        for (size_t v = 0; v < nvars; ++v) g.push_back(img.derivative(v));
        grads.push_back(std::move(g));
    }
    int best = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        SplitMix64 rng(seed + uint64_t(attempt) * 0x9E37ULL);
        std::vector<Rational> point;
        for (size_t v = 0; v < ctx->image_vars().size(); ++v) {
            Rational r = random_rational(rng, 20, 7);
            if (is_zero(r)) r = Rational(1 + attempt);
            point.push_back(r);
        }
        RrefBasis basis{int(nvars)};
        for (const auto& g : grads) {
            SparseRow row;
            for (size_t v = 0; v < nvars; ++v) {
                Rational val = g[v].evaluate(point);
                if (!is_zero(val)) row.emplace_back(int(v), val);
            }
            basis.insert(std::move(row));
        }
        best = std::max(best, basis.rank());
        if (best == int(ps.size())) break;
    }
    out.rank = best;
    out.independent = best == int(ps.size());
    out.verdict = out.independent ? "independent"
                                  : "dependent at tested points (not a proof)";
    return out;
}

DiffOp realize(const NCPoly& p, const std::vector<DiffOp>& ops) {
    if (ops.size() != p.ctx()->dim())
        throw LieError("realization arity does not match the enveloping algebra");
    const VarSet& vars = ops.empty() ? VarSet() : ops.front().vars();
    DiffOp out(vars);
    DiffOp unit = DiffOp::multiplication(Polynomial::constant(vars, Rational(1)));
    for (const auto& [m, c] : p.terms()) {
        DiffOp acc = unit;
        for (size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) acc = acc.compose(ops[i]);
        Polynomial coeff = c.map_onto(vars);
        out = out + acc.scale(coeff);
    }
    return out;
}

// ---- text form --------------------------------------------------------------

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Polynomial& coeff = it->second;
        std::string gens;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            gens += "*" + ctx_->names()[i];
            if (m.e[i] != 1) gens += "^" + std::to_string(m.e[i]);
        }
        if (coeff.term_count() == 1) {
            const auto& [pm, pc] = *coeff.terms().begin();
            bool neg = sgn(pc) < 0;
            if (first)
                out << (neg ? "-" : "");
            else
                out << (neg ? " - " : " + ");
            first = false;
            Rational a = neg ? Rational(-pc) : pc;
            std::string head;
            bool pm_trivial = pm.is_constant();
            if (!is_one(a) || (pm_trivial && gens.empty())) head = rat_str(a);
            for (size_t i = 0; i < pm.e.size(); ++i) {
                if (pm.e[i] == 0) continue;
                if (!head.empty()) head += "*";
                head += coeff.vars().name(i);
                if (pm.e[i] != 1) head += "^" + std::to_string(pm.e[i]);
            }
            if (head.empty())
                out << gens.substr(1);
            else
                out << head << gens;
        } else {
            if (!first) out << " + ";
            first = false;
            out << "(" << coeff.str() << ")";
            out << gens;
        }
    }
    return out.str();
}

NCPoly NCPoly::parse(PbwContextPtr ctx, const std::string& text) {
    NCPoly out(ctx);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty expression");
    bool first = true;
    const VarSet& params = ctx->params();
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        Rational coeff(sign);
        Monomial pmono;
        pmono.e.assign(params.size(), 0);
        std::vector<int> word;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("dangling term in '" + text + "'");
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                        text[pos] == '/'))
                    ++pos;
                coeff *= rat_parse(text.substr(start, pos - start));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                        text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                int power = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    size_t nstart = pos;
                    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
                    while (pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (nstart == pos) throw ParseError("missing exponent in '" + text + "'");
                    power = std::stoi(text.substr(nstart, pos - nstart));
                }
                int g = ctx->index_of(name);
                if (g >= 0) {
                    if (power < 0) throw ParseError("negative generator power");
                    for (int k = 0; k < power; ++k) word.push_back(g);
                } else {
                    auto pidx = params.index_of(name);
                    if (!pidx)
                        throw ParseError("unknown symbol '" + name + "' in '" + text + "'");
                    pmono.e[*pidx] += power;
                }
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" +
                                 text + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        Polynomial pc(params);
        pc.add_term(pmono, coeff);
        NCPoly piece = normal_order_word(ctx, word, pc);
        out = out + piece;
    }
    return out;
}

} // namespace liewb
