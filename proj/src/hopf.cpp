#include "qorbit/hopf.hpp"

namespace qorbit {

QDiffOperator realize(const WordSum& ws, const GeneratorSet& gs) {
    QDiffOperator out;
    for (const auto& [c, w] : ws.terms) {
        QDiffOperator p = QDiffOperator::identity();
        for (Gen g : w) p = op_mul(p, gs.gen(g));
        out += c * p;
    }
    return out;
}

WordSum star(const WordSum& ws) {
    WordSum out;
    for (const auto& [c, w] : ws.terms) {
        QScalar nc = c.star_conj();
        Word nw;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (*it) {
                case Gen::K: nw.push_back(Gen::K); break;
                case Gen::Kinv: nw.push_back(Gen::Kinv); break;
                case Gen::E:
                    nc *= -QScalar::q_pow(-1);
                    nw.push_back(Gen::E);
                    break;
                case Gen::F:
                    nc *= -QScalar::q_pow(1);
                    nw.push_back(Gen::F);
                    break;
            }
        }
        out.add(nc, nw);
    }
    return out;
}

std::vector<Relation> defining_relations() {
    using G = Gen;
    QScalar q = QScalar::q_pow(1), qi = QScalar::q_pow(-1);
    QScalar dq_inv = (q - qi).inv();
    std::vector<Relation> rels;
    rels.push_back({"K*Kinv = 1", WordSum::word({G::K, G::Kinv}), WordSum::word({})});
    rels.push_back({"Kinv*K = 1", WordSum::word({G::Kinv, G::K}), WordSum::word({})});
    rels.push_back({"K*E = q*E*K", WordSum::word({G::K, G::E}), WordSum::word({G::E, G::K}, q)});
    rels.push_back({"K*F = q^-1*F*K", WordSum::word({G::K, G::F}), WordSum::word({G::F, G::K}, qi)});
    WordSum lhs = WordSum::word({G::E, G::F});
    lhs.add(QScalar(-1), {G::F, G::E});
    WordSum rhs = WordSum::word({G::K, G::K}, dq_inv);
    rhs.add(-dq_inv, {G::Kinv, G::Kinv});
    rels.push_back({"[E,F] = (K^2-K^-2)/(q-q^-1)", std::move(lhs), std::move(rhs)});
    return rels;
}

VerificationReport verify_relations(int sigma) {
    VerificationReport rep("relations");
    GeneratorSet gs = generators(sigma);
    for (const auto& rel : defining_relations()) {
        QDiffOperator res = realize(rel.lhs, gs) - realize(rel.rhs, gs);
        rep.add(-1, -sigma, rel.name, res.is_zero(), res.is_zero() ? "" : res.str());
    }
    return rep;
}

std::vector<std::pair<Word, Word>> CoproductRule::delta(Gen X) const {
    switch (X) {
        case Gen::K: return {{{Gen::K}, {Gen::K}}};
        case Gen::Kinv: return {{{Gen::Kinv}, {Gen::Kinv}}};
        case Gen::E: return {{{Gen::E}, {Gen::K}}, {{Gen::Kinv}, {Gen::E}}};
        default: return {{{Gen::F}, {Gen::K}}, {{Gen::Kinv}, {Gen::F}}};
    }
}

QScalar CoproductRule::counit(Gen X) const {
    switch (X) {
        case Gen::K:
        case Gen::Kinv: return QScalar(1);
        default: return QScalar();
    }
}

VerificationReport leibniz_check(int jmax) {
    if (jmax < 1) throw std::invalid_argument("leibniz_check requires jmax >= 1");
    VerificationReport rep("leibniz");
    GeneratorSet gs = generators(0);
    CoproductRule cop;
    const Gen gens_to_check[] = {Gen::K, Gen::Kinv, Gen::E, Gen::F};
    for (Gen X : gens_to_check) {
        // counit normalization: X . 1 = eps(X) 1
        ZRational one = ZRational(1);
        ZRational lhs1 = apply(gs.gen(X), one);
        ZRational rhs1 = cop.counit(X) * one;
        {
            ZRational res = lhs1 - rhs1;
            rep.add(-1, -1, std::string("counit ") + gen_name(X), res.is_zero(),
                    res.is_zero() ? "" : res.str());
        }
        // counit law on the Sweedler table: (eps x id) Delta X = X = (id x eps) Delta X
        QDiffOperator left, right;
        for (const auto& [w1, w2] : cop.delta(X)) {
            QScalar e1(1), e2(1);
            for (Gen g : w1) e1 *= cop.counit(g);
            for (Gen g : w2) e2 *= cop.counit(g);
            left += e1 * realize(WordSum::word(w2), gs);
            right += e2 * realize(WordSum::word(w1), gs);
        }
        QDiffOperator cres = (left - gs.gen(X)) + (right - gs.gen(X));
        rep.add(-1, -1, std::string("counit law ") + gen_name(X), cres.is_zero(),
                cres.is_zero() ? "" : cres.str());
        // Leibniz on monomial products
        for (int a = 0; a <= jmax; ++a) {
            for (int b = 0; b <= jmax; ++b) {
                ZRational za = ZRational::z_pow(a), zb = ZRational::z_pow(b);
                ZRational lhs = apply(gs.gen(X), za * zb);
                ZRational rhs;
                for (const auto& [w1, w2] : cop.delta(X))
                    rhs += apply(realize(WordSum::word(w1), gs), za) *
                           apply(realize(WordSum::word(w2), gs), zb);
                ZRational res = lhs - rhs;
                rep.add(a, b, std::string("leibniz ") + gen_name(X), res.is_zero(),
                        res.is_zero() ? "" : res.str());
            }
        }
    }
    return rep;
}

VerificationReport star_relation_check(int sigma) {
    VerificationReport rep("star");
    GeneratorSet gs = generators(sigma);
    for (const auto& rel : defining_relations()) {
        QDiffOperator res = realize(star(rel.lhs), gs) - realize(star(rel.rhs), gs);
        rep.add(-1, -sigma, std::string("star ") + rel.name, res.is_zero(),
                res.is_zero() ? "" : res.str());
    }
    return rep;
}

}  // namespace qorbit
