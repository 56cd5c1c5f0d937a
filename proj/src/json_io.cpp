#include "addtop/json_io.hpp"

namespace addtop {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

int objIndexOrThrow(const CatPtr& c, const Json& j) {
    if (!j.is_string()) bad("object reference is not a string");
    int idx = c->objIndex(j.get<std::string>());
    return idx;
}

std::string homKey(const std::string& a, const std::string& b) { return a + "|" + b; }

} // namespace

Json scalarToJson(const Scalar& s) {
    if (s.field().kind == Field::Kind::Fp) return s.residue();
    const mpq_class& q = s.rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalarFromJson(const Field& f, const Json& j) {
    if (f.kind == Field::Kind::Fp) {
        if (!j.is_number_integer()) bad("F_p scalar is not an integer");
        return Scalar::ofInt(f, j.get<long>());
    }
    if (!j.is_string()) bad("rational scalar is not a \"num/den\" string");
    try {
        mpq_class q(j.get<std::string>());
        if (q.get_den() == 0) bad("zero denominator");
        q.canonicalize();
        return Scalar::ofRational(q);
    } catch (const std::invalid_argument&) {
        bad("unparseable rational '" + j.get<std::string>() + "'");
    }
}

Json matrixToJson(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalarToJson(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrixFromJson(const Field& f, std::size_t rows, std::size_t cols, const Json& j) {
    if (!j.is_array() || j.size() != rows) bad("matrix row count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad("matrix column count mismatch");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalarFromJson(f, j[i][k]);
    }
    return m;
}

Json toJson(const FinLinearCategory& c) {
    Json j;
    if (c.field.kind == Field::Kind::Fp)
        j["field"] = Json{{"type", "Fp"}, {"p", c.field.p}};
    else
        j["field"] = Json{{"type", "Q"}};
    j["objects"] = c.objects;
    int n = static_cast<int>(c.numObjects());
    Json hom = Json::object();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Json basis = Json::array();
            for (std::size_t k = 0; k < c.dim(a, b); ++k) basis.push_back(c.basisLabel(a, b, k));
            hom[homKey(c.objects[a], c.objects[b])] =
                Json{{"dim", c.dim(a, b)}, {"basis", std::move(basis)}};
        }
    j["hom"] = std::move(hom);
    // table[f][g] = coords of (basis g: B->C) ∘ (basis f: A->B) in hom(A,C)
    Json compose = Json::array();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                if (c.dim(a, b) == 0 || c.dim(b, d) == 0) continue;
                Json table = Json::array();
                for (std::size_t f = 0; f < c.dim(a, b); ++f) {
                    Json row = Json::array();
                    for (std::size_t g = 0; g < c.dim(b, d); ++g) {
                        Matrix coords = c.composeBasis(a, b, d, g, f);
                        Json cell = Json::array();
                        for (std::size_t i = 0; i < coords.rows(); ++i)
                            cell.push_back(scalarToJson(coords.at(i, 0)));
                        row.push_back(std::move(cell));
                    }
                    table.push_back(std::move(row));
                }
                compose.push_back(Json{
                    {"triple", Json::array({c.objects[a], c.objects[b], c.objects[d]})},
                    {"table", std::move(table)}});
            }
    j["compose"] = std::move(compose);
    Json identity = Json::object();
    for (int o = 0; o < n; ++o) {
        Json cell = Json::array();
        for (std::size_t i = 0; i < c.identityCoords[o].rows(); ++i)
            cell.push_back(scalarToJson(c.identityCoords[o].at(i, 0)));
        identity[c.objects[o]] = std::move(cell);
    }
    j["identity"] = std::move(identity);
    if (c.monoidal) {
        const auto& m = *c.monoidal;
        Json mon;
        mon["unit"] = c.objects[m.unit];
        Json tobj = Json::object();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (auto r = m.tensorObj(a, b)) tobj[homKey(c.objects[a], c.objects[b])] = c.objects[*r];
        mon["tensorObj"] = std::move(tobj);
        Json tmor = Json::object();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        if (c.dim(a, b) == 0 || c.dim(x, y) == 0) continue;
                        if (!m.tensorObj(a, x) || !m.tensorObj(b, y)) continue;
                        Json table = Json::array();
                        for (std::size_t f = 0; f < c.dim(a, b); ++f) {
                            Json row = Json::array();
                            for (std::size_t g = 0; g < c.dim(x, y); ++g) {
                                Matrix coords = m.tensorMor(a, b, x, y, f, g);
                                Json cell = Json::array();
                                for (std::size_t i = 0; i < coords.rows(); ++i)
                                    cell.push_back(scalarToJson(coords.at(i, 0)));
                                row.push_back(std::move(cell));
                            }
                            table.push_back(std::move(row));
                        }
                        tmor[c.objects[a] + "|" + c.objects[b] + "|" + c.objects[x] + "|" +
                             c.objects[y]] = std::move(table);
                    }
        mon["tensorMor"] = std::move(tmor);
        mon["symmetric"] = m.symmetricIdentityBraiding;
        j["monoidal"] = std::move(mon);
    }
    return j;
}

CatPtr catFromJson(const Json& j) {
    auto c = std::make_shared<FinLinearCategory>();
    const Json& fj = member(j, "field");
    std::string kind = member(fj, "type").get<std::string>();
    if (kind == "Fp")
        c->field = Field::fp(member(fj, "p").get<unsigned>());
    else if (kind == "Q")
        c->field = Field::rationals();
    else
        bad("unknown field type '" + kind + "'");

    const Json& objs = member(j, "objects");
    if (!objs.is_array() || objs.empty()) bad("objects must be a nonempty list");
    for (const auto& o : objs) c->objects.push_back(o.get<std::string>());
    int n = static_cast<int>(c->numObjects());

    auto labels = std::make_shared<std::map<std::pair<int, int>, std::vector<std::string>>>();
    c->homDim.assign(n, std::vector<std::size_t>(n, 0));
    const Json& hom = member(j, "hom");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::string key = homKey(c->objects[a], c->objects[b]);
            if (!hom.contains(key)) bad("missing hom entry '" + key + "'");
            const Json& h = hom.at(key);
            c->homDim[a][b] = member(h, "dim").get<std::size_t>();
            const Json& basis = member(h, "basis");
            if (basis.size() != c->homDim[a][b]) bad("basis label count at '" + key + "'");
            for (const auto& l : basis) (*labels)[{a, b}].push_back(l.get<std::string>());
        }
    c->basisLabelFn = [labels](int a, int b, std::size_t k) { return labels->at({a, b})[k]; };

    const Json& identity = member(j, "identity");
    for (int o = 0; o < n; ++o) {
        if (!identity.contains(c->objects[o])) bad("missing identity at '" + c->objects[o] + "'");
        const Json& cell = identity.at(c->objects[o]);
        if (cell.size() != c->dim(o, o)) bad("identity coords shape at '" + c->objects[o] + "'");
        Matrix m(c->field, c->dim(o, o), 1);
        for (std::size_t i = 0; i < cell.size(); ++i) m.at(i, 0) = scalarFromJson(c->field, cell[i]);
        c->identityCoords.push_back(std::move(m));
    }

    auto table =
        std::make_shared<std::map<std::tuple<int, int, int>, std::vector<std::vector<Matrix>>>>();
    for (const auto& entry : member(j, "compose")) {
        const Json& triple = member(entry, "triple");
        if (triple.size() != 3) bad("compose triple size");
        int a = objIndexOrThrow(c, triple[0]);
        int b = objIndexOrThrow(c, triple[1]);
        int d = objIndexOrThrow(c, triple[2]);
        const Json& tab = member(entry, "table");
        if (tab.size() != c->dim(a, b)) bad("compose table row count");
        std::vector<std::vector<Matrix>> m(c->dim(a, b));
        for (std::size_t f = 0; f < c->dim(a, b); ++f) {
            if (tab[f].size() != c->dim(b, d)) bad("compose table column count");
            for (std::size_t g = 0; g < c->dim(b, d); ++g) {
                const Json& cell = tab[f][g];
                if (cell.size() != c->dim(a, d)) bad("compose coords length");
                Matrix coords(c->field, c->dim(a, d), 1);
                for (std::size_t i = 0; i < cell.size(); ++i)
                    coords.at(i, 0) = scalarFromJson(c->field, cell[i]);
                m[f].push_back(std::move(coords));
            }
        }
        (*table)[{a, b, d}] = std::move(m);
    }
    c->composeFn = [table](int a, int b, int d, std::size_t g, std::size_t f) {
        auto it = table->find({a, b, d});
        if (it == table->end()) bad("missing compose table entry");
        return it->second[f][g];
    };

    if (j.contains("monoidal")) {
        const Json& mj = j.at("monoidal");
        MonoidalStructure m;
        m.unit = objIndexOrThrow(c, member(mj, "unit"));
        auto tobj = std::make_shared<std::map<std::pair<int, int>, int>>();
        for (const auto& [key, val] : member(mj, "tensorObj").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos) bad("tensorObj key '" + key + "'");
            (*tobj)[{c->objIndex(key.substr(0, bar)), c->objIndex(key.substr(bar + 1))}] =
                objIndexOrThrow(c, val);
        }
        m.tensorObj = [tobj](int a, int b) -> std::optional<int> {
            auto it = tobj->find({a, b});
            if (it == tobj->end()) return std::nullopt;
            return it->second;
        };
        auto tmor = std::make_shared<std::map<std::tuple<int, int, int, int>,
                                              std::vector<std::vector<Matrix>>>>();
        CatPtr cc = c;
        for (const auto& [key, tab] : member(mj, "tensorMor").items()) {
            std::vector<std::string> parts;
            std::size_t pos = 0;
            while (true) {
                auto bar = key.find('|', pos);
                parts.push_back(key.substr(pos, bar - pos));
                if (bar == std::string::npos) break;
                pos = bar + 1;
            }
            if (parts.size() != 4) bad("tensorMor key '" + key + "'");
            int a = c->objIndex(parts[0]), b = c->objIndex(parts[1]);
            int x = c->objIndex(parts[2]), y = c->objIndex(parts[3]);
            auto ac = tobj->find({a, x});
            auto bd = tobj->find({b, y});
            if (ac == tobj->end() || bd == tobj->end()) bad("tensorMor outside tensorObj");
            std::size_t rows = c->dim(ac->second, bd->second);
            if (tab.size() != c->dim(a, b)) bad("tensorMor table row count");
            std::vector<std::vector<Matrix>> mt(c->dim(a, b));
            for (std::size_t f = 0; f < c->dim(a, b); ++f) {
                if (tab[f].size() != c->dim(x, y)) bad("tensorMor table column count");
                for (std::size_t g = 0; g < c->dim(x, y); ++g) {
                    const Json& cell = tab[f][g];
                    if (cell.size() != rows) bad("tensorMor coords length");
                    Matrix coords(c->field, rows, 1);
                    for (std::size_t i = 0; i < rows; ++i)
                        coords.at(i, 0) = scalarFromJson(c->field, cell[i]);
                    mt[f].push_back(std::move(coords));
                }
            }
            (*tmor)[{a, b, x, y}] = std::move(mt);
        }
        m.tensorMor = [tmor](int a, int b, int x, int y, std::size_t f, std::size_t g) {
            auto it = tmor->find({a, b, x, y});
            if (it == tmor->end()) bad("missing tensorMor table entry");
            return it->second[f][g];
        };
        m.symmetricIdentityBraiding = member(mj, "symmetric").get<bool>();
        c->monoidal = std::move(m);
    }

    ValidationReport rep = validateMonoidal(*c);
    if (!rep.ok) bad("category axioms fail: " + rep.violations.front());
    return c;
}

Json toJson(const Presheaf& F) {
    const CatPtr& c = F.cat;
    int n = static_cast<int>(c->numObjects());
    Json values = Json::object();
    for (int o = 0; o < n; ++o) values[c->objects[o]] = F.dims[o];
    Json action = Json::object();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (std::size_t k = 0; k < c->dim(a, b); ++k)
                action[homKey(c->objects[a], c->objects[b]) + "|" + std::to_string(k)] =
                    matrixToJson(F.basisAction(a, b, k));
    return Json{{"values", std::move(values)}, {"action", std::move(action)}};
}

Presheaf presheafFromJson(const CatPtr& c, const Json& j) {
    Presheaf F;
    F.cat = c;
    int n = static_cast<int>(c->numObjects());
    const Json& values = member(j, "values");
    for (int o = 0; o < n; ++o) {
        if (!values.contains(c->objects[o])) bad("missing value dim at '" + c->objects[o] + "'");
        F.dims.push_back(values.at(c->objects[o]).get<std::size_t>());
    }
    const Json& action = member(j, "action");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Matrix> mats;
            for (std::size_t k = 0; k < c->dim(a, b); ++k) {
                std::string key =
                    homKey(c->objects[a], c->objects[b]) + "|" + std::to_string(k);
                if (!action.contains(key)) bad("missing action entry '" + key + "'");
                mats.push_back(matrixFromJson(c->field, F.dims[a], F.dims[b], action.at(key)));
            }
            F.act[{a, b}] = std::move(mats);
        }
    ValidationReport rep = validatePresheaf(F);
    if (!rep.ok) bad("presheaf functoriality fails: " + rep.violations.front());
    return F;
}

Json toJson(const Topology& t) {
    const CatPtr& c = t.cat;
    Json min = Json::object();
    for (int x = 0; x < static_cast<int>(c->numObjects()); ++x) {
        Json per = Json::object();
        for (int b = 0; b < static_cast<int>(c->numObjects()); ++b)
            if (t.minSieve[x].spans[b].cols() > 0)
                per[c->objects[b]] = matrixToJson(t.minSieve[x].spans[b]);
        min[c->objects[x]] = std::move(per);
    }
    return Json{{"minSieve", std::move(min)}};
}

Topology topologyFromJson(const CatPtr& c, const Json& j) {
    Topology t{c, {}};
    const Json& min = member(j, "minSieve");
    int n = static_cast<int>(c->numObjects());
    for (int x = 0; x < n; ++x) {
        if (!min.contains(c->objects[x])) bad("missing minSieve at '" + c->objects[x] + "'");
        const Json& per = min.at(c->objects[x]);
        Sieve s = zeroSieve(c, x);
        for (int b = 0; b < n; ++b) {
            if (!per.contains(c->objects[b])) continue;
            const Json& mj = per.at(c->objects[b]);
            std::size_t cols = mj.empty() ? 0 : mj[0].size();
            s.spans[b] = colSpanBasis(matrixFromJson(c->field, c->dim(b, x), cols, mj));
        }
        if (!isClosedSieve(s)) bad("minSieve at '" + c->objects[x] + "' is not a sieve");
        t.minSieve.push_back(std::move(s));
    }
    return t;
}

Json toJson(const Pretopology& s) {
    const CatPtr& c = s.cat;
    Json seqs = Json::array();
    for (const auto& seq : s.sequences) {
        Json middle = Json::array(), left = Json::array(), q = Json::array(), p = Json::array();
        for (int y : seq.middle) middle.push_back(c->objects[y]);
        for (int z : seq.left) left.push_back(c->objects[z]);
        auto coordsOf = [](const Morphism& m) {
            Json cell = Json::array();
            for (std::size_t i = 0; i < m.coords.rows(); ++i)
                cell.push_back(scalarToJson(m.coords.at(i, 0)));
            return cell;
        };
        for (const auto& qb : seq.q) q.push_back(coordsOf(qb));
        for (const auto& row : seq.p) {
            Json prow = Json::array();
            for (const auto& m : row) prow.push_back(coordsOf(m));
            p.push_back(std::move(prow));
        }
        seqs.push_back(Json{{"target", c->objects[seq.target]},
                            {"middle", std::move(middle)},
                            {"left", std::move(left)},
                            {"q", std::move(q)},
                            {"p", std::move(p)}});
    }
    return Json{{"sequences", std::move(seqs)}, {"searchDepth", s.searchDepth}};
}

Pretopology pretopologyFromJson(const CatPtr& c, const Json& j) {
    Pretopology s{c, {}, 8, std::nullopt};
    if (j.contains("searchDepth")) s.searchDepth = j.at("searchDepth").get<std::size_t>();
    for (const auto& sj : member(j, "sequences")) {
        FormalSequence seq;
        seq.cat = c;
        seq.target = objIndexOrThrow(c, member(sj, "target"));
        for (const auto& y : member(sj, "middle")) seq.middle.push_back(objIndexOrThrow(c, y));
        for (const auto& z : member(sj, "left")) seq.left.push_back(objIndexOrThrow(c, z));
        auto morphOf = [&](int src, int tgt, const Json& cell) {
            if (cell.size() != c->dim(src, tgt)) bad("morphism coords length");
            Matrix m(c->field, c->dim(src, tgt), 1);
            for (std::size_t i = 0; i < cell.size(); ++i)
                m.at(i, 0) = scalarFromJson(c->field, cell[i]);
            return Morphism{src, tgt, std::move(m)};
        };
        const Json& q = member(sj, "q");
        if (q.size() != seq.middle.size()) bad("q length mismatch");
        for (std::size_t b = 0; b < q.size(); ++b)
            seq.q.push_back(morphOf(seq.middle[b], seq.target, q[b]));
        const Json& p = member(sj, "p");
        if (p.size() != seq.left.size()) bad("p length mismatch");
        for (std::size_t g = 0; g < p.size(); ++g) {
            if (p[g].size() != seq.middle.size()) bad("p row length mismatch");
            std::vector<Morphism> row;
            for (std::size_t b = 0; b < seq.middle.size(); ++b)
                row.push_back(morphOf(seq.left[g], seq.middle[b], p[g][b]));
            seq.p.push_back(std::move(row));
        }
        validateSequence(seq);
        s.sequences.push_back(std::move(seq));
    }
    return s;
}

} // namespace addtop
