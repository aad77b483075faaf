#include "blocklie/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blocklie {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    Poly p(nvars);
    p.add_term(m, Rat(1));
    return p;
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("monomial length mismatch");
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return monomial_degree(terms_.begin()->first) == monomial_degree(terms_.rbegin()->first);
}

const Rat& Poly::coeff(const Monomial& m) const {
    static const Rat kZero(0);
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("coeff: exponent length mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("term length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("add: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("sub: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mul: variable count mismatch");
    Poly r(nvars_);
    Monomial m(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: image list length mismatch");
    int out_nvars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != out_nvars) throw std::invalid_argument("substitute: images disagree on nvars");

    // Power cache per variable; powers[i][e] = images[i]^e.
    std::vector<std::vector<Poly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(Poly::constant(out_nvars, Rat(1)));

    Poly r(out_nvars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(out_nvars, c);
        for (int i = 0; i < nvars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= m[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (m[i] > 0) t = t * powers[i][m[i]];
        }
        r += t;
    }
    return r;
}

Poly Poly::rename(std::span<const int> idx, int out_nvars) const {
    if (static_cast<int>(idx.size()) != nvars_) throw std::invalid_argument("rename: index list length mismatch");
    for (int j : idx)
        if (j < 0 || j >= out_nvars) throw std::invalid_argument("rename: target index out of range");
    Poly r(out_nvars);
    Monomial m(out_nvars);
    for (const auto& [e, c] : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (int j = 0; j < nvars_; ++j) m[idx[j]] += e[j];
        r.add_term(m, c);
    }
    return r;
}

Poly Poly::flip_signs(const std::vector<bool>& flip) const {
    if (static_cast<int>(flip.size()) != nvars_) throw std::invalid_argument("flip_signs: mask length mismatch");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int odd = 0;
        for (int i = 0; i < nvars_; ++i)
            if (flip[i]) odd ^= (m[i] & 1);
        r.terms_.emplace(m, odd ? -c : c);
    }
    return r;
}

Poly pi_even(const Poly& p) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        bool all_even = true;
        for (int e : m)
            if (e & 1) { all_even = false; break; }
        if (all_even) r.add_term(m, c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool has_var = monomial_degree(m) > 0;
        if (!unit || !has_var) os << rat_to_string(a);
        bool star = !unit && has_var;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << "z" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

std::string Poly::to_json() const {
    nlohmann::json j;
    j["nvars"] = nvars_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json t;
        t["exp"] = m;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

Poly poly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Poly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        Monomial m = t.at("exp").get<std::vector<int>>();
        Int num(t.at("num").get<std::string>());
        Int den(t.at("den").get<std::string>());
        p.add_term(m, ratio(num, den));
    }
    return p;
}

} // namespace blocklie
