#pragma once

#include "qorbit/qdiff_operator.hpp"
#include "qorbit/report.hpp"

#include <vector>

namespace qorbit {

using Word = std::vector<Gen>;

/// Formal linear combination of generator words, the carrier for relations
/// and for the star anti-automorphism before realization as operators.
struct WordSum {
    std::vector<std::pair<QScalar, Word>> terms;

    static WordSum word(Word w, QScalar c = QScalar(1)) { return {{{std::move(c), std::move(w)}}}; }
    WordSum& add(QScalar c, Word w) {
        terms.emplace_back(std::move(c), std::move(w));
        return *this;
    }
};

QDiffOperator realize(const WordSum& ws, const GeneratorSet& gs);

/// Conjugate-linear anti-automorphism: reverses words, K -> K, K^-1 -> K^-1,
/// E -> -q^-1 E, F -> -q F, and conjugates scalars by i -> -i, u -> u^-1.
WordSum star(const WordSum& ws);

struct Relation {
    std::string name;
    WordSum lhs;
    WordSum rhs;
};

/// The defining relations: K K^-1 = K^-1 K = 1, KE = q EK, KF = q^-1 FK,
/// [E,F] = (K^2 - K^-2)/(q - q^-1).
std::vector<Relation> defining_relations();

/// Residuals of the defining relations in the operator realization.
VerificationReport verify_relations(int sigma);

/// Comultiplication table in Sweedler pairs plus counit values.
struct CoproductRule {
    std::vector<std::pair<Word, Word>> delta(Gen X) const;
    QScalar counit(Gen X) const;
};

/// Leibniz rule for the sigma = 0 action on all products z^a z^b,
/// 0 <= a, b <= jmax, plus the counit law on each Sweedler table.
VerificationReport leibniz_check(int jmax);

/// star applied to both sides of every defining relation, realized at the
/// given sigma; passes iff each starred relation still holds.
VerificationReport star_relation_check(int sigma);

}  // namespace qorbit
