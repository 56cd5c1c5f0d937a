#include "addtop/pretop.hpp"

#include <algorithm>
#include <set>

#include "addtop/sheafify.hpp"

namespace addtop {

void validateSequence(const FormalSequence& s) {
    const CatPtr& c = s.cat;
    if (s.q.size() != s.middle.size() || s.p.size() != s.left.size())
        throw ShapeError("sequence: index mismatch");
    for (std::size_t b = 0; b < s.middle.size(); ++b)
        if (s.q[b].src != s.middle[b] || s.q[b].tgt != s.target)
            throw ShapeError("sequence: right map shape");
    for (std::size_t g = 0; g < s.left.size(); ++g) {
        if (s.p[g].size() != s.middle.size()) throw ShapeError("sequence: left map shape");
        Morphism acc = c->zeroMorphism(s.left[g], s.target);
        for (std::size_t b = 0; b < s.middle.size(); ++b) {
            if (s.p[g][b].src != s.left[g] || s.p[g][b].tgt != s.middle[b])
                throw ShapeError("sequence: left map shape");
            Morphism comp = c->compose(s.q[b], s.p[g][b]);
            acc.coords = acc.coords + comp.coords;
        }
        if (!acc.isZero()) throw NotAComplex("sequence: composite does not vanish");
    }
}

Sieve sequenceSieve(const FormalSequence& s) { return generatedSieve(s.cat, s.target, s.q); }

namespace {

// ⊕_b hom(A,Y_b) -> hom(A,X)
Matrix rightMatrix(const FormalSequence& s, int A) {
    Matrix m(s.cat->field, s.cat->dim(A, s.target), 0);
    for (const auto& qb : s.q) m = m.hstack(s.cat->postcompositionMatrix(qb, A));
    return m;
}

// ⊕_g hom(A,Z_g) -> ⊕_b hom(A,Y_b), row blocks over b
Matrix leftMatrix(const FormalSequence& s, int A) {
    const CatPtr& c = s.cat;
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> roff{0}, coff{0};
    for (int y : s.middle) roff.push_back(rows += c->dim(A, y));
    for (int z : s.left) coff.push_back(cols += c->dim(A, z));
    Matrix m(c->field, rows, cols);
    for (std::size_t g = 0; g < s.left.size(); ++g)
        for (std::size_t b = 0; b < s.middle.size(); ++b) {
            Matrix block = c->postcompositionMatrix(s.p[g][b], A);
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    m.at(roff[b] + i, coff[g] + j) = block.at(i, j);
        }
    return m;
}

struct CoverEnum {
    std::vector<std::vector<Morphism>> states; // identity state first
    bool exhausted = true;
};

std::string stateSignature(const std::vector<Morphism>& gens) {
    std::vector<std::string> parts;
    for (const auto& g : gens) parts.push_back(std::to_string(g.src) + ":" + g.coords.str());
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + "|";
    return out;
}

// BFS over composite coverings at X: each state is a generating family;
// a step refines every generator whose source has coverings (one choice
// of covering per generator).
CoverEnum compositeCoverings(const Pretopology& s, int X, std::size_t maxDepth,
                             std::size_t stateCap) {
    const CatPtr& c = s.cat;
    std::vector<std::vector<std::vector<Morphism>>> co(c->numObjects());
    for (const auto& seq : s.sequences) co[seq.target].push_back(seq.q);

    CoverEnum out;
    std::set<std::string> seen;
    std::vector<std::vector<Morphism>> frontier{{c->identity(X)}};
    seen.insert(stateSignature(frontier[0]));
    out.states.push_back(frontier[0]);

    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
        if (depth >= maxDepth) {
            out.exhausted = false;
            break;
        }
        std::vector<std::vector<Morphism>> next;
        for (const auto& gens : frontier) {
            std::vector<std::size_t> radix;
            bool refinable = false;
            for (const auto& g : gens) {
                radix.push_back(std::max<std::size_t>(1, co[g.src].size()));
                if (!co[g.src].empty()) refinable = true;
            }
            if (!refinable || gens.empty()) continue;
            std::vector<std::size_t> idx(gens.size(), 0);
            while (true) {
                std::vector<Morphism> child;
                std::set<std::pair<int, std::string>> childSeen;
                auto push = [&](const Morphism& m) {
                    if (m.isZero()) return;
                    if (childSeen.insert({m.src, m.coords.str()}).second) child.push_back(m);
                };
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    if (co[gens[i].src].empty())
                        push(gens[i]);
                    else
                        for (const auto& qb : co[gens[i].src][idx[i]])
                            push(c->compose(gens[i], qb));
                }
                if (seen.insert(stateSignature(child)).second) {
                    if (out.states.size() >= stateCap)
                        throw TooLarge("compositeCoverings: state cap exceeded");
                    out.states.push_back(child);
                    next.push_back(child);
                }
                std::size_t i = 0;
                while (i < gens.size() && idx[i] + 1 == radix[i]) idx[i++] = 0;
                if (i == gens.size()) break;
                ++idx[i];
            }
        }
        frontier = std::move(next);
    }
    return out;
}

void worsen(Verdict& v, Verdict w) {
    if (w == Verdict::Violated || v == Verdict::Violated)
        v = Verdict::Violated;
    else if (w == Verdict::Unknown)
        v = Verdict::Unknown;
}

} // namespace

AxiomReport checkPTa(const Pretopology& s) {
    AxiomReport rep;
    if (s.structuralWitness) {
        rep.notes.push_back("(PTa) " + *s.structuralWitness);
        return rep;
    }
    const CatPtr& c = s.cat;
    int n = static_cast<int>(c->numObjects());
    bool fp = c->field.kind == Field::Kind::Fp;
    for (const auto& seq : s.sequences) {
        validateSequence(seq);
        Sieve rq = sequenceSieve(seq);
        for (int a = 0; a < n; ++a) {
            if (c->dim(a, seq.target) == 0) continue;
            CoverEnum cov = compositeCoverings(s, a, s.searchDepth, 1u << 14);
            auto witnessed = [&](const Sieve& pb) {
                for (const auto& st : cov.states) {
                    bool ok = true;
                    for (const auto& g : st)
                        if (!sieveMember(pb, g)) { ok = false; break; }
                    if (ok) return true;
                }
                return false;
            };
            std::vector<Morphism> fs;
            bool complete = fp && c->dim(a, seq.target) <= 12;
            if (complete)
                for (const auto& v : allVectors(c->field, c->dim(a, seq.target)))
                    fs.push_back(Morphism{a, seq.target, v});
            else
                for (std::size_t k = 0; k < c->dim(a, seq.target); ++k)
                    fs.push_back(c->basisMorphism(a, seq.target, k));
            Sieve common = maximalSieve(c, a);
            for (const auto& f : fs) {
                if (f.isZero()) continue;
                Sieve pb = pullbackSieve(rq, f);
                common = sieveIntersection(common, pb);
                if (!witnessed(pb)) {
                    if (cov.exhausted) {
                        worsen(rep.verdict, Verdict::Violated);
                        rep.notes.push_back("(PTa) no refinement at " + c->objects[a] +
                                            " for [" + f.coords.str() + "]");
                    } else {
                        worsen(rep.verdict, Verdict::Unknown);
                        rep.notes.push_back("(PTa) depth exhausted at " + c->objects[a]);
                    }
                }
            }
            if (!complete && !witnessed(common)) {
                worsen(rep.verdict, Verdict::Unknown);
                rep.notes.push_back("(PTa) no common witness for combinations at " +
                                    c->objects[a]);
            }
        }
    }
    return rep;
}

AxiomReport checkPTb(const Pretopology& s) {
    AxiomReport rep;
    if (s.structuralWitness) {
        rep.notes.push_back("(PTb) " + *s.structuralWitness);
        return rep;
    }
    const CatPtr& c = s.cat;
    int n = static_cast<int>(c->numObjects());
    bool fp = c->field.kind == Field::Kind::Fp;
    for (const auto& seq : s.sequences) {
        validateSequence(seq);
        bool strong = true;
        for (int a = 0; a < n; ++a) {
            Matrix q = rightMatrix(seq, a);
            if (rank(leftMatrix(seq, a)) != q.cols() - rank(q)) strong = false;
        }
        if (strong) continue; // (PTb') holds, which implies (PTb)

        for (int a = 0; a < n; ++a) {
            Matrix q = rightMatrix(seq, a);
            Matrix ker = kernelBasis(q);
            Matrix im = colSpanBasis(leftMatrix(seq, a));
            if (spanContains(ker, im)) continue;

            CoverEnum cov = compositeCoverings(s, a, s.searchDepth, 1u << 14);
            // image of the left map at each source object
            std::vector<Matrix> ims;
            for (int b = 0; b < n; ++b) ims.push_back(colSpanBasis(leftMatrix(seq, b)));
            // block-diagonal precomposition on the middle sum
            auto blockPre = [&](const Morphism& g) {
                std::size_t rows = 0, cols = 0;
                for (int y : seq.middle) {
                    rows += c->dim(g.src, y);
                    cols += c->dim(g.tgt, y);
                }
                Matrix m(c->field, rows, cols);
                std::size_t ro = 0, co2 = 0;
                for (int y : seq.middle) {
                    Matrix blk = c->precompositionMatrix(g, y);
                    for (std::size_t i = 0; i < blk.rows(); ++i)
                        for (std::size_t j = 0; j < blk.cols(); ++j)
                            m.at(ro + i, co2 + j) = blk.at(i, j);
                    ro += blk.rows();
                    co2 += blk.cols();
                }
                return m;
            };
            auto witnessed = [&](const Matrix& f) {
                for (const auto& st : cov.states) {
                    bool ok = true;
                    for (const auto& g : st)
                        if (!spanContains(blockPre(g) * f, ims[g.src])) { ok = false; break; }
                    if (ok) return true;
                }
                return false;
            };
            // a single refinement working for the whole kernel settles every
            // linear combination at once
            if (witnessed(ker)) continue;
            std::vector<Matrix> fs;
            bool complete = fp && ker.cols() <= 12;
            if (complete)
                for (const auto& v : allVectors(c->field, ker.cols())) fs.push_back(ker * v);
            else
                for (std::size_t j = 0; j < ker.cols(); ++j) fs.push_back(ker.col(j));
            bool allOk = true;
            for (const auto& f : fs) {
                if (f.isZero() || witnessed(f)) continue;
                allOk = false;
                if (cov.exhausted) {
                    worsen(rep.verdict, Verdict::Violated);
                    rep.notes.push_back("(PTb) no refinement at " + c->objects[a]);
                } else {
                    worsen(rep.verdict, Verdict::Unknown);
                    rep.notes.push_back("(PTb) depth exhausted at " + c->objects[a]);
                }
                break;
            }
            if (!complete && allOk) {
                worsen(rep.verdict, Verdict::Unknown);
                rep.notes.push_back("(PTb) combinations unverified at " + c->objects[a]);
            }
        }
    }
    return rep;
}

Topology topOf(const Pretopology& s, std::size_t stateCap) {
    const CatPtr& c = s.cat;
    Topology t{c, {}};
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x) {
        CoverEnum cov = compositeCoverings(s, x, 64, stateCap);
        if (!cov.exhausted) throw TooLarge("topOf: refinement depth exceeded");
        Sieve min = maximalSieve(c, x);
        for (const auto& st : cov.states)
            min = sieveIntersection(min, generatedSieve(c, x, st));
        t.minSieve.push_back(min);
    }
    CheckReport rep = axiomCheck(t);
    if (!rep.ok) {
        std::string msg = "topOf: result fails the axioms:";
        for (const auto& v : rep.violations) msg += " " + v;
        throw ValidationError(msg);
    }
    return t;
}

std::vector<Sieve> compositeCoveringSieves(const Pretopology& s, int X, std::size_t maxDepth,
                                           std::size_t stateCap) {
    CoverEnum cov = compositeCoverings(s, X, maxDepth, stateCap);
    std::vector<Sieve> out;
    for (const auto& st : cov.states) out.push_back(generatedSieve(s.cat, X, st));
    return out;
}

std::vector<Sieve> coveringChain(const Pretopology& s, int X, std::size_t maxLen) {
    const CatPtr& c = s.cat;
    std::vector<std::vector<std::vector<Morphism>>> co(c->numObjects());
    for (const auto& seq : s.sequences) co[seq.target].push_back(seq.q);

    std::vector<Sieve> chain;
    std::vector<Morphism> fam{c->identity(X)};
    for (std::size_t k = 0; k < maxLen; ++k) {
        std::vector<Morphism> next;
        std::set<std::pair<int, std::string>> seen;
        bool refined = false;
        for (const auto& g : fam) {
            if (co[g.src].empty()) {
                if (seen.insert({g.src, g.coords.str()}).second) next.push_back(g);
                continue;
            }
            refined = true;
            for (const auto& qb : co[g.src][0]) {
                Morphism m = c->compose(g, qb);
                if (!m.isZero() && seen.insert({m.src, m.coords.str()}).second)
                    next.push_back(m);
            }
        }
        if (!refined) break;
        fam = std::move(next);
        chain.push_back(generatedSieve(c, X, fam));
        if (chain.size() >= 2 && chain.back() == chain[chain.size() - 2]) break;
    }
    return chain;
}

ShHomResult shHomVia(const Pretopology& s, int X, int Xp, std::size_t maxStage) {
    std::vector<Sieve> chain = coveringChain(s, X, maxStage);
    if (chain.empty()) chain.push_back(maximalSieve(s.cat, X));
    return shHomAlongChain(s.cat, X, Xp, chain);
}

bool inPrePrime(const Topology& t, const FormalSequence& seq) {
    validateSequence(seq);
    for (int a = 0; a < static_cast<int>(seq.cat->numObjects()); ++a) {
        Matrix q = rightMatrix(seq, a);
        if (rank(leftMatrix(seq, a)) != q.cols() - rank(q)) return false;
    }
    return covers(t, sequenceSieve(seq));
}

SequenceComplex sequenceComplex(const FormalSequence& s) {
    const CatPtr& c = s.cat;
    int n = static_cast<int>(c->numObjects());
    auto dsum = [&](const std::vector<int>& objs) {
        Presheaf F;
        F.cat = c;
        for (int a = 0; a < n; ++a) {
            std::size_t d = 0;
            for (int y : objs) d += c->dim(a, y);
            F.dims.push_back(d);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<Matrix> mats;
                for (std::size_t k = 0; k < c->dim(a, b); ++k) {
                    Morphism g = c->basisMorphism(a, b, k);
                    Matrix m(c->field, F.dims[a], F.dims[b]);
                    std::size_t ro = 0, co = 0;
                    for (int y : objs) {
                        Matrix blk = c->precompositionMatrix(g, y);
                        for (std::size_t i = 0; i < blk.rows(); ++i)
                            for (std::size_t j = 0; j < blk.cols(); ++j)
                                m.at(ro + i, co + j) = blk.at(i, j);
                        ro += blk.rows();
                        co += blk.cols();
                    }
                    mats.push_back(m);
                }
                F.act[{a, b}] = std::move(mats);
            }
        return F;
    };
    SequenceComplex out;
    out.FZ = dsum(s.left);
    out.FY = dsum(s.middle);
    out.FX = representable(c, s.target);
    for (int a = 0; a < n; ++a) {
        out.q.comp.push_back(rightMatrix(s, a));
        out.p.comp.push_back(leftMatrix(s, a));
    }
    return out;
}

namespace {

bool sheafificationKills(const Topology& t, const Presheaf& F) {
    if (F.isZeroPresheaf()) return true;
    SigmaResult s1 = sigma(t, F);
    if (s1.presheaf.isZeroPresheaf()) return true;
    return sigma(t, s1.presheaf).presheaf.isZeroPresheaf();
}

} // namespace

bool inPre(const Topology& t, const FormalSequence& seq) {
    validateSequence(seq);
    SequenceComplex sc = sequenceComplex(seq);
    Presheaf h = homology(sc.FZ, sc.FY, sc.FX, sc.p, sc.q);
    Presheaf coker = cokernelPresheaf(sc.FY, sc.FX, sc.q);
    return sheafificationKills(t, h) && sheafificationKills(t, coker);
}

bool isSheafVia(const Pretopology& s, const Presheaf& F) {
    const CatPtr& c = s.cat;
    for (const auto& seq : s.sequences) {
        Matrix qstar(c->field, 0, F.dim(seq.target));
        for (const auto& qb : seq.q) qstar = qstar.vstack(F.action(qb));
        std::size_t zrows = 0;
        std::vector<std::size_t> yoff{0};
        for (int y : seq.middle) yoff.push_back(yoff.back() + F.dim(y));
        for (int z : seq.left) zrows += F.dim(z);
        Matrix pstar(c->field, zrows, yoff.back());
        std::size_t ro = 0;
        for (std::size_t g = 0; g < seq.left.size(); ++g) {
            for (std::size_t b = 0; b < seq.middle.size(); ++b) {
                Matrix blk = F.action(seq.p[g][b]);
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t j = 0; j < blk.cols(); ++j)
                        pstar.at(ro + i, yoff[b] + j) = blk.at(i, j);
            }
            ro += F.dim(seq.left[g]);
        }
        std::size_t r = rank(qstar);
        if (r != F.dim(seq.target)) return false;
        if (r != pstar.cols() - rank(pstar)) return false;
    }
    return true;
}

PreTwoReport preTwo(const Topology& t, const std::vector<FormalSequence>& candidates) {
    PreTwoReport rep;
    Pretopology filtered{t.cat, {}, 8, std::nullopt};
    for (const auto& seq : candidates) {
        if (seq.middle.size() > 1 || seq.left.size() > 1)
            throw ShapeError("preTwo: candidate not 2-bounded");
        if (inPre(t, seq)) filtered.sequences.push_back(seq);
    }
    rep.accepted = filtered.sequences.size();
    Topology tt = topOf(filtered);
    rep.ok = tt == t;
    if (!rep.ok) rep.notes.push_back("generated topology differs from the target");
    return rep;
}

FormalSequence sequenceWithKernel(const CatPtr& c, int target,
                                  const std::vector<Morphism>& q) {
    FormalSequence s;
    s.cat = c;
    s.target = target;
    for (const auto& m : q) {
        if (m.tgt != target) throw TargetMismatch("sequenceWithKernel: target mismatch");
        s.middle.push_back(m.src);
        s.q.push_back(m);
    }
    for (int b = 0; b < static_cast<int>(c->numObjects()); ++b) {
        Matrix phi(c->field, c->dim(b, target), 0);
        for (const auto& m : q) phi = phi.hstack(c->postcompositionMatrix(m, b));
        Matrix ker = kernelBasis(phi);
        for (std::size_t j = 0; j < ker.cols(); ++j) {
            s.left.push_back(b);
            std::vector<Morphism> row;
            std::size_t off = 0;
            for (const auto& m : q) {
                std::size_t hd = c->dim(b, m.src);
                Matrix h(c->field, hd, 1);
                for (std::size_t i = 0; i < hd; ++i) h.at(i, 0) = ker.at(off + i, j);
                off += hd;
                row.push_back(Morphism{b, m.src, h});
            }
            s.p.push_back(std::move(row));
        }
    }
    validateSequence(s);
    return s;
}

Pretopology gabrielPretopology(const CatPtr& c, const Morphism& x, std::size_t depth) {
    return Pretopology{c, {sequenceWithKernel(c, x.tgt, {x})}, depth, std::nullopt};
}

Pretopology fromTopology(const Topology& t, std::size_t depth) {
    Pretopology s{t.cat, {}, depth, std::nullopt};
    for (int x = 0; x < static_cast<int>(t.cat->numObjects()); ++x) {
        if (t.minSieve[x].isMaximal()) continue;
        s.sequences.push_back(sequenceWithKernel(t.cat, x, sieveGenerators(t.minSieve[x])));
    }
    return s;
}

JoinMeet joinMeet(const std::vector<Topology>& ts) {
    if (ts.empty()) throw ShapeError("joinMeet: empty input");
    const CatPtr& c = ts[0].cat;
    JoinMeet out{Topology{c, {}}, Topology{c, {}}};
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x) {
        Sieve acc = ts[0].minSieve[x];
        for (std::size_t i = 1; i < ts.size(); ++i) acc = sieveSum(acc, ts[i].minSieve[x]);
        out.meet.minSieve.push_back(acc);
    }
    Pretopology uni{c, {}, 16, std::nullopt};
    for (const auto& t : ts)
        for (auto& seq : fromTopology(t).sequences) uni.sequences.push_back(seq);
    out.join = topOf(uni);
    return out;
}

} // namespace addtop
