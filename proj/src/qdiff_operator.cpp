#include "qorbit/qdiff_operator.hpp"

#include "qorbit/errors.hpp"

#include <sstream>

namespace qorbit {

QDiffOperator QDiffOperator::term(int a, int b, const QScalar& c) {
    QDiffOperator r;
    if (!c.is_zero()) r.terms_.emplace(std::make_pair(a, b), c);
    return r;
}

QScalar QDiffOperator::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? QScalar() : it->second;
}

void QDiffOperator::set_coeff(int a, int b, const QScalar& c) {
    if (c.is_zero())
        terms_.erase({a, b});
    else
        terms_[{a, b}] = c;
}

QDiffOperator operator+(const QDiffOperator& A, const QDiffOperator& B) {
    QDiffOperator r = A;
    for (const auto& [k, c] : B.terms_) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) + c);
    return r;
}

QDiffOperator operator-(const QDiffOperator& A, const QDiffOperator& B) {
    QDiffOperator r = A;
    for (const auto& [k, c] : B.terms_) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) - c);
    return r;
}

QDiffOperator operator-(const QDiffOperator& A) {
    QDiffOperator r;
    for (const auto& [k, c] : A.terms()) r.set_coeff(k.first, k.second, -c);
    return r;
}

QDiffOperator operator*(const QScalar& s, const QDiffOperator& A) {
    QDiffOperator r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : A.terms()) r.set_coeff(k.first, k.second, s * c);
    return r;
}

QDiffOperator op_mul(const QDiffOperator& A, const QDiffOperator& B) {
    QDiffOperator r;
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            // z^a S^b * z^c S^d = q^{bc} z^{a+c} S^{b+d}
            int a = ka.first + kb.first;
            int b = ka.second + kb.second;
            QScalar c = QScalar::q_pow(ka.second * kb.first) * ca * cb;
            r.set_coeff(a, b, r.coeff(a, b) + c);
        }
    }
    return r;
}

QDiffOperator commutator(const QDiffOperator& A, const QDiffOperator& B) {
    return op_mul(A, B) - op_mul(B, A);
}

ZRational apply(const QDiffOperator& A, const ZRational& f) {
    ZRational r;
    for (const auto& [k, c] : A.terms()) r += c * f.q_shifted(k.second).z_shifted(k.first);
    return r;
}

std::string QDiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first != 0) os << " * z^" << k.first;
        if (k.second != 0) os << " * S^" << k.second;
    }
    return os.str();
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::K: return "K";
        case Gen::Kinv: return "Kinv";
        case Gen::E: return "E";
        default: return "F";
    }
}

const QDiffOperator& GeneratorSet::gen(Gen g) const {
    switch (g) {
        case Gen::K: return K;
        case Gen::Kinv: return Kinv;
        case Gen::E: return E;
        default: return F;
    }
}

GeneratorSet generators(int sigma) {
    const int n = -sigma;
    GeneratorSet gs;
    gs.sigma = sigma;
    QScalar dq = QScalar::q_pow(1) - QScalar::q_pow(-1);  // q - q^{-1}
    gs.K = QDiffOperator::term(0, 1, QScalar::u_pow(n));
    gs.Kinv = QDiffOperator::term(0, -1, QScalar::u_pow(-n));
    gs.E = QDiffOperator::term(1, 1, QScalar::u_pow(3 * n) / dq) +
           QDiffOperator::term(1, -1, -(QScalar::u_pow(-n) / dq));
    gs.F = QDiffOperator::term(-1, 1, -(QScalar::u_pow(-n) / dq)) +
           QDiffOperator::term(-1, -1, QScalar::u_pow(-n) / dq);
    return gs;
}

std::pair<QScalar, int> monomial_action(Gen X, int sigma, int j) {
    switch (X) {
        case Gen::K: return {QScalar::u_pow(2 * j - sigma), j};
        case Gen::Kinv: return {QScalar::u_pow(sigma - 2 * j), j};
        case Gen::E: return {QScalar::u_pow(-sigma) * q_number(j - sigma), j + 1};
        default: return {-(QScalar::u_pow(sigma) * q_number(j)), j - 1};
    }
}

}  // namespace qorbit
