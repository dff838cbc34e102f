// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace discroot {

namespace {

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

u64 mod_pow(u64 b, u64 e, u64 p)
{
    u64 r = 1 % p;
    b %= p;
    while (e != 0)
    {
        if (e & 1)
            r = static_cast<u64>(u128{r} * b % p);
        b = static_cast<u64>(u128{b} * b % p);
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 p)
{
    if (a % p == 0)
        throw std::domain_error("division by zero in F_p");
    return mod_pow(a % p, p - 2, p);
}

}  // namespace

Field::Field(u64 p, unsigned k, std::vector<u64> modulus)
  : p_{p}, k_{k}, modulus_{std::move(modulus)}
{}

std::shared_ptr<const Field> Field::prime(u64 p)
{
    if (p >= (u64{1} << 16) || !is_prime_u64(p))
        throw std::invalid_argument("characteristic must be a prime below 2^16");
    return std::shared_ptr<const Field>(new Field(p, 1, {0, 1}));
}

std::shared_ptr<const Field> Field::extension(u64 p, unsigned k)
{
    if (k == 0 || k > 16)
        throw std::invalid_argument("extension degree must be in [1, 16]");
    if (k == 1)
        return prime(p);
    const auto f = find_irreducible(p, k);
    std::vector<u64> m;
    m.reserve(k + 1);
    for (int i = 0; i <= f.degree(); ++i)
        m.push_back(f.coeff(static_cast<size_t>(i)).residue());
    return std::shared_ptr<const Field>(new Field(p, k, std::move(m)));
}

std::shared_ptr<const Field> Field::extension(u64 p, std::vector<u64> modulus)
{
    if (modulus.size() < 2)
        throw std::invalid_argument("modulus must have degree >= 1");
    const auto k = static_cast<unsigned>(modulus.size() - 1);
    if (k > 16)
        throw std::invalid_argument("extension degree must be in [1, 16]");
    const auto base = prime(p);
    for (auto& c : modulus)
        c %= p;
    if (modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    std::vector<FieldElement> fc;
    fc.reserve(modulus.size());
    for (const auto c : modulus)
        fc.push_back(base->from_int(static_cast<long long>(c)));
    if (k > 1 && !is_irreducible(Polynomial(base, std::move(fc))))
        throw std::invalid_argument("modulus is reducible");
    return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

u128 Field::order() const
{
    if (!order_fits_u128())
        throw std::domain_error("field order exceeds 127 bits");
    u128 q = 1;
    for (unsigned i = 0; i < k_; ++i)
        q *= p_;
    return q;
}

bool Field::order_fits_u128() const
{
    u128 q = 1;
    const u128 limit = u128{1} << 126;
    for (unsigned i = 0; i < k_; ++i)
    {
        if (q > limit / p_)
            return false;
        q *= p_;
    }
    return true;
}

FieldElement Field::zero() const
{
    return FieldElement(shared_from_this(), std::vector<u64>(k_, 0));
}

FieldElement Field::one() const
{
    return from_int(1);
}

FieldElement Field::from_int(long long v) const
{
    const auto m = static_cast<long long>(p_);
    auto r = v % m;
    if (r < 0)
        r += m;
    std::vector<u64> c(k_, 0);
    c[0] = static_cast<u64>(r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element(std::vector<u64> coeffs) const
{
    if (coeffs.size() > k_)
        throw std::invalid_argument("coefficient vector longer than field degree");
    coeffs.resize(k_, 0);
    for (auto& c : coeffs)
        c %= p_;
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement Field::generator() const
{
    if (k_ < 2)
        throw std::logic_error("prime field has no extension generator");
    std::vector<u64> c(k_, 0);
    c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element_at(u128 idx) const
{
    // Canonical order is lexicographic with c_0 most significant, so peel
    // digits from the top.
    std::vector<u64> c(k_, 0);
    u128 scale = 1;
    for (unsigned i = 1; i < k_; ++i)
        scale *= p_;
    for (unsigned i = 0; i < k_; ++i)
    {
        c[i] = static_cast<u64>(idx / scale);
        idx %= scale;
        if (i + 1 < k_)
            scale /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

std::vector<FieldElement> Field::all_elements() const
{
    const auto q = order();
    if (q > (u128{1} << 20))
        throw std::domain_error("field too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(q));
    for (u128 i = 0; i < q; ++i)
        out.push_back(element_at(i));
    return out;
}

FieldElement::FieldElement(FieldPtr field, std::vector<u64> coeffs)
  : field_{std::move(field)}, c_{std::move(coeffs)}
{
    if (c_.size() != field_->degree())
        throw std::invalid_argument("coefficient vector size mismatch");
}

void FieldElement::check_same_field(const FieldElement& o) const
{
    if (!field_ || !o.field_ || !field_->same_as(*o.field_))
        throw std::invalid_argument("field elements from different fields");
}

bool FieldElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElement::is_one() const
{
    if (c_.empty() || c_[0] != 1)
        return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

u64 FieldElement::residue() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            throw std::logic_error("residue() requires a prime-field element");
    return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    check_same_field(o);
    const auto p = field_->characteristic();
    auto r = c_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] + o.c_[i]) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
    check_same_field(o);
    const auto p = field_->characteristic();
    auto r = c_;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (r[i] + p - o.c_[i]) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const
{
    const auto p = field_->characteristic();
    auto r = c_;
    for (auto& v : r)
        v = (p - v) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    check_same_field(o);
    const auto p = field_->characteristic();
    const auto k = field_->degree();
    if (k == 1)
        return FieldElement(field_, {static_cast<u64>(u128{c_[0]} * o.c_[0] % p)});

    std::vector<u64> prod(2 * k - 1, 0);
    for (size_t i = 0; i < k; ++i)
    {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < k; ++j)
            prod[i + j] = static_cast<u64>((prod[i + j] + u128{c_[i]} * o.c_[j]) % p);
    }
    // reduce by the monic modulus
    const auto& m = field_->modulus();
    for (size_t d = prod.size(); d-- > k;)
    {
        const u64 lead = prod[d];
        if (lead == 0)
            continue;
        prod[d] = 0;
        for (size_t i = 0; i < k; ++i)
            prod[d - k + i] = static_cast<u64>((prod[d - k + i] + u128{lead} * (p - m[i] % p)) % p);
    }
    prod.resize(k);
    return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inv() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    const auto p = field_->characteristic();
    if (field_->degree() == 1)
        return FieldElement(field_, {mod_inv(c_[0], p)});

    // Extended Euclid in F_p[x] against the modulus.
    const auto base = Field::prime(p);
    auto lift = [&](const std::vector<u64>& v) {
        std::vector<FieldElement> fc;
        fc.reserve(v.size());
        for (const auto x : v)
            fc.push_back(base->from_int(static_cast<long long>(x)));
        return Polynomial(base, std::move(fc));
    };
    Polynomial r0 = lift(field_->modulus());
    Polynomial r1 = lift(c_);
    Polynomial s0(base), s1(base);
    s1 = Polynomial(base, {base->one()});
    while (!r1.is_zero())
    {
        auto [q, r2] = r0.divmod(r1);
        auto s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since the modulus is irreducible)
    if (r0.degree() != 0)
        throw std::logic_error("modulus not coprime to element");
    auto s = s0 * r0.lead().inv();
    std::vector<u64> out(field_->degree(), 0);
    for (int i = 0; i <= s.degree(); ++i)
        out[static_cast<size_t>(i)] = s.coeff(static_cast<size_t>(i)).residue();
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
    return *this * o.inv();
}

bool FieldElement::operator==(const FieldElement& o) const
{
    check_same_field(o);
    return c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const
{
    check_same_field(o);
    return c_ < o.c_;
}

FieldElement FieldElement::pow(u128 e) const
{
    auto r = field_->one();
    auto b = *this;
    while (e != 0)
    {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const
{
    return pow(field_->characteristic());
}

u128 FieldElement::multiplicative_order() const
{
    if (is_zero())
        throw std::domain_error("order of zero");
    const auto q = field_->order();
    u128 n = q - 1;
    // Divide out each prime factor of q-1 as far as possible.
    u128 m = n;
    for (u128 d = 2; d * d <= m;)
    {
        if (m % d == 0)
        {
            while (m % d == 0)
                m /= d;
            while (n % d == 0 && pow(n / d).is_one())
                n /= d;
        }
        ++d;
    }
    if (m > 1)
        while (n % m == 0 && pow(n / m).is_one())
            n /= m;
    return n;
}

std::string FieldElement::str() const
{
    std::ostringstream os;
    if (field_->degree() == 1)
    {
        os << c_[0];
        return os.str();
    }
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i)
        os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
}

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
  : field_{std::move(field)}, c_{std::move(coeffs)}
{
    normalize();
}

void Polynomial::normalize()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Polynomial Polynomial::from_ints(const FieldPtr& field, const std::vector<long long>& coeffs)
{
    std::vector<FieldElement> fc;
    fc.reserve(coeffs.size());
    for (const auto v : coeffs)
        fc.push_back(field->from_int(v));
    return Polynomial(field, std::move(fc));
}

Polynomial Polynomial::x_power(const FieldPtr& field, unsigned d)
{
    std::vector<FieldElement> fc(d + 1, field->zero());
    fc[d] = field->one();
    return Polynomial(field, std::move(fc));
}

FieldElement Polynomial::coeff(size_t i) const
{
    return i < c_.size() ? c_[i] : field_->zero();
}

FieldElement Polynomial::lead() const
{
    if (c_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] = r[i] + o.c_[i];
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] = r[i] - o.c_[i];
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (is_zero() || o.is_zero())
        return Polynomial(field_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
    {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const FieldElement& s) const
{
    auto r = c_;
    for (auto& v : r)
        v = v * s;
    return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return *this * lead().inv();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const
{
    if (d.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree())
        return {Polynomial(field_), *this};
    const auto dl_inv = d.lead().inv();
    auto rem = c_;
    std::vector<FieldElement> quot(c_.size() - d.c_.size() + 1, field_->zero());
    for (int i = degree(); i >= d.degree(); --i)
    {
        const auto qi = static_cast<size_t>(i - d.degree());
        if (rem[static_cast<size_t>(i)].is_zero())
            continue;
        const auto f = rem[static_cast<size_t>(i)] * dl_inv;
        quot[qi] = f;
        for (size_t j = 0; j < d.c_.size(); ++j)
            rem[qi + j] = rem[qi + j] - f * d.c_[j];
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& o) const
{
    auto a = *this;
    auto b = o;
    while (!b.is_zero())
    {
        auto r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() < 2)
        return Polynomial(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * field_->from_int(static_cast<long long>(i)));
    return Polynomial(field_, std::move(r));
}

FieldElement Polynomial::eval(const FieldElement& x) const
{
    auto r = field_->zero();
    for (size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

Polynomial Polynomial::pow_mod(u128 e, const Polynomial& m) const
{
    auto r = Polynomial(field_, {field_->one()}).mod(m);
    auto b = mod(m);
    while (e != 0)
    {
        if (e & 1)
            r = (r * b).mod(m);
        b = (b * b).mod(m);
        e >>= 1;
    }
    return r;
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;)
    {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || !c_[i].is_one())
            os << c_[i].str();
        if (i > 0)
        {
            if (!c_[i].is_one())
                os << '*';
            os << 'x';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

bool is_irreducible(const Polynomial& f)
{
    const auto k = f.degree();
    if (k < 1)
        return false;
    if (k == 1)
        return true;
    const auto& field = f.field();
    const auto q = field->order();
    const auto fm = f.monic();
    const auto x = Polynomial::x_power(field, 1);

    // x^(q^j) mod f, computed by iterating the q-power map j times.
    auto q_power_iterate = [&](unsigned j) {
        auto g = x.mod(fm);
        for (unsigned i = 0; i < j; ++i)
            g = g.pow_mod(q, fm);
        return g;
    };

    if (q_power_iterate(static_cast<unsigned>(k)) != x.mod(fm))
        return false;
    for (int t = 2; t <= k; ++t)
    {
        if (k % t != 0)
            continue;
        bool t_prime = true;
        for (int d = 2; d * d <= t; ++d)
            if (t % d == 0)
            {
                t_prime = false;
                break;
            }
        if (!t_prime)
            continue;
        const auto g = q_power_iterate(static_cast<unsigned>(k / t)) - x.mod(fm);
        if (fm.gcd(g).degree() != 0)
            return false;
    }
    return true;
}

Polynomial find_irreducible(u64 p, unsigned k)
{
    const auto base = Field::prime(p);
    if (k == 1)
        return Polynomial::x_power(base, 1);
    // Scan candidate lower-coefficient vectors in lexicographic order with the
    // constant term varying fastest; equivalently count m upward in base p.
    std::vector<u64> digits(k, 0);
    for (;;)
    {
        std::vector<FieldElement> fc;
        fc.reserve(k + 1);
        for (unsigned i = 0; i < k; ++i)
            fc.push_back(base->from_int(static_cast<long long>(digits[i])));
        fc.push_back(base->one());
        Polynomial f(base, std::move(fc));
        if (is_irreducible(f))
            return f;
        unsigned i = 0;
        while (i < k && ++digits[i] == p)
            digits[i++] = 0;
        if (i == k)
            throw std::logic_error("no irreducible of requested degree");
    }
}

namespace {

// Equal-degree splitting of a monic squarefree product of linear factors.
void split_linear(const Polynomial& h, std::vector<FieldElement>& out, std::mt19937_64& rng)
{
    const auto d = h.degree();
    if (d <= 0)
        return;
    const auto& field = h.field();
    if (d == 1)
    {
        out.push_back(-h.coeff(0));
        return;
    }
    const auto q = field->order();
    if (q % 2 == 0)
        throw std::domain_error("root splitting requires odd field order");
    const u128 e = (q - 1) / 2;
    for (;;)
    {
        const auto a = field->element_at(rng() % static_cast<u64>(std::min<u128>(q, u128{1} << 63)));
        auto probe = (Polynomial::x_power(field, 1) + Polynomial(field, {a})).pow_mod(e, h);
        probe = probe - Polynomial(field, {field->one()});
        const auto g = h.gcd(probe);
        if (g.degree() > 0 && g.degree() < d)
        {
            split_linear(g, out, rng);
            split_linear(h.divmod(g).first, out, rng);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElement> poly_roots(const Polynomial& f)
{
    std::vector<FieldElement> roots;
    if (f.degree() < 1)
        return roots;
    const auto& field = f.field();
    const auto q = field->order();

    std::vector<FieldElement> distinct;
    if (q <= (u128{1} << 16))
    {
        for (u128 i = 0; i < q; ++i)
        {
            const auto x = field->element_at(i);
            if (f.eval(x).is_zero())
                distinct.push_back(x);
        }
    }
    else
    {
        // gcd(f, x^q - x) isolates the distinct roots, then split.
        const auto fm = f.monic();
        const auto xq = Polynomial::x_power(field, 1).pow_mod(q, fm);
        auto h = fm.gcd(xq - Polynomial::x_power(field, 1));
        std::mt19937_64 rng{0x5eed5eed5eed5eedULL};
        split_linear(h, distinct, rng);
        std::sort(distinct.begin(), distinct.end());
    }

    for (const auto& r : distinct)
    {
        // multiplicity by trial division
        const Polynomial lin(field, {-r, field->one()});
        auto g = f;
        for (;;)
        {
            auto [quot, rem] = g.divmod(lin);
            if (!rem.is_zero())
                break;
            roots.push_back(r);
            g = std::move(quot);
            if (g.degree() < 1)
                break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool nth_power_class(const FieldElement& x, u64 n)
{
    if (x.is_zero())
        throw std::domain_error("power class of zero");
    const auto q = x.field()->order();
    u128 g = n;
    u128 b = q - 1;
    while (b != 0)
    {
        const auto t = g % b;
        g = b;
        b = t;
    }
    return x.pow((q - 1) / g).is_one();
}

std::vector<FieldElement> field_sqrt(const FieldElement& x)
{
    const auto& field = x.field();
    Polynomial f(field, {-x, field->zero(), field->one()});
    auto r = poly_roots(f);
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

Embedding::Embedding(FieldPtr sub, FieldPtr super) : sub_{std::move(sub)}, super_{std::move(super)}
{
    if (sub_->characteristic() != super_->characteristic())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (super_->degree() % sub_->degree() != 0)
        throw std::invalid_argument("subfield degree must divide superfield degree");
    const auto a = sub_->degree();
    if (a == 1)
    {
        gen_powers_ = {super_->one()};
        return;
    }
    if (sub_->same_as(*super_))
    {
        // identity map: powers of the field's own generator
        gen_powers_.assign(1, super_->one());
        for (unsigned i = 1; i < a; ++i)
            gen_powers_.push_back(gen_powers_.back() * super_->generator());
        return;
    }
    std::vector<FieldElement> mc;
    mc.reserve(sub_->modulus().size());
    for (const auto c : sub_->modulus())
        mc.push_back(super_->from_int(static_cast<long long>(c)));
    const auto roots = poly_roots(Polynomial(super_, std::move(mc)));
    if (roots.empty())
        throw std::logic_error("subfield modulus has no root in superfield");
    const auto& r = roots.front();
    gen_powers_.assign(1, super_->one());
    for (unsigned i = 1; i < a; ++i)
        gen_powers_.push_back(gen_powers_.back() * r);
}

FieldElement Embedding::operator()(const FieldElement& e) const
{
    if (!e.field()->same_as(*sub_))
        throw std::invalid_argument("element not in embedding domain");
    auto out = super_->zero();
    const auto& c = e.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        out = out + gen_powers_[i] * super_->from_int(static_cast<long long>(c[i]));
    return out;
}

}  // namespace discroot
