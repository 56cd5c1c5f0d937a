// Command-line front door: every subcommand emits a single RunReport JSON
// object on stdout. Exit codes: 0 ok, 1 check failed, 2 malformed input,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "addtop/json_io.hpp"
#include "addtop/verify.hpp"

using namespace addtop;

namespace {

struct Options {
    std::uint64_t seed = 1;
    std::size_t maxDim = 2;
    std::size_t maxSieves = 1u << 20;
    std::size_t depth = 0; // 0 = keep the value stored in the input
};

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

struct Report {
    Json inputs = Json::object();
    Json results = Json::object();
    Json warnings = Json::array();
};

Json readFile(Report& rep, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    rep.inputs[path] = fnv1a(buf.str());
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in '" + path + "'");
    return j;
}

int emit(const std::string& command, const Report& rep, int exitCode) {
    Json out;
    out["command"] = command;
    out["inputs"] = rep.inputs;
    out["results"] = rep.results;
    out["warnings"] = rep.warnings;
    out["exitCode"] = exitCode;
    std::cout << out.dump(2) << "\n";
    return exitCode;
}

void attachVerdicts(Report& rep, const Pretopology& s) {
    auto label = [](Verdict v) {
        return v == Verdict::Verified ? "Verified" : v == Verdict::Unknown ? "Unknown" : "Violated";
    };
    AxiomReport a = checkPTa(s), b = checkPTb(s);
    rep.results["PTa"] = label(a.verdict);
    rep.results["PTb"] = label(b.verdict);
    for (const auto& r : {a, b})
        if (r.verdict == Verdict::Unknown)
            for (const auto& n : r.notes) rep.warnings.push_back(n);
}

int cmdValidate(Report& rep, const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    rep.results["valid"] = true;
    rep.results["objects"] = c->objects;
    rep.results["field"] = c->field.str();
    rep.results["monoidal"] = c->monoidal.has_value();
    return 0;
}

int cmdTop(Report& rep, const Options& opt, const std::string& ptPath,
           const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    Pretopology s = pretopologyFromJson(c, readFile(rep, ptPath));
    if (opt.depth) s.searchDepth = opt.depth;
    attachVerdicts(rep, s);
    rep.results["topology"] = toJson(topOf(s));
    return 0;
}

int cmdSheafify(Report& rep, const std::string& tPath, const std::string& fPath,
                const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    Topology t = topologyFromJson(c, readFile(rep, tPath));
    Presheaf F = presheafFromJson(c, readFile(rep, fPath));
    SheafificationResult r = sheafifyOp(t, F);
    rep.results["sheaf"] = toJson(r.sheaf);
    rep.results["unitIso"] = isIsoMap(F, r.sheaf, r.unit);
    return 0;
}

int cmdCheckSheaf(Report& rep, const std::string& tPath, const std::string& fPath,
                  const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    Topology t = topologyFromJson(c, readFile(rep, tPath));
    Presheaf F = presheafFromJson(c, readFile(rep, fPath));
    bool sheaf = isSheaf(t, F);
    rep.results["sheaf"] = sheaf;
    rep.results["separated"] = isSeparated(t, F);
    return sheaf ? 0 : 1;
}

int cmdEnumerate(Report& rep, const Options& opt, const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    auto lat = enumerateTopologies(c, opt.maxSieves);
    rep.results["count"] = lat.size();
    Json list = Json::array();
    for (const auto& t : lat) list.push_back(toJson(t));
    rep.results["topologies"] = std::move(list);
    return 0;
}

int cmdProps(Report& rep, const Options& opt, const std::string& tPath,
             const std::string& catPath) {
    CatPtr c = catFromJson(readFile(rep, catPath));
    Topology t = topologyFromJson(c, readFile(rep, tPath));
    SubcanonicalResult sc = subcanonicalCheck(t);
    rep.results["subcanonical"] = sc.subcanonical;
    if (!sc.subcanonical) rep.results["witness"] = sc.witness;
    rep.results["boundedGeneration"] = boundedGeneration(t);
    if (c->monoidal) {
        MonoidalCheckResult m = monoidalCheck(t);
        rep.results["monoidal"] = m.ok;
        if (!m.ok) rep.results["monoidalWitness"] = m.witness;
        for (const auto& clip : m.clips) rep.warnings.push_back("clip: " + clip);
    }
    if (c->field.kind == Field::Kind::Fp) {
        auto lat = enumerateTopologies(c, opt.maxSieves);
        for (std::size_t i = 0; i < lat.size(); ++i)
            if (lat[i] == t) rep.results["latticeRank"] = i;
        rep.results["isCanonical"] = canonicalTopologies(c, opt.maxSieves).canonical == t;
        std::size_t sheaves = 0;
        for (const auto& F : enumeratePresheaves(c, opt.maxDim))
            if (isSheaf(t, F)) ++sheaves;
        rep.results["sheafCount"] = sheaves;
    }
    return 0;
}

int cmdProjHom(Report& rep, unsigned n, int d, int window) {
    try {
        ShHomResult r = projHom(n, d, window);
        rep.results["dim"] = r.dim;
        rep.results["stabilizedAt"] = r.stabilizedAt;
        rep.results["stages"] = r.stages;
        return 0;
    } catch (const Unstable& e) {
        rep.results["stable"] = false;
        rep.warnings.push_back(std::string(e.what()) + "; try a larger --window");
        return 1;
    }
}

int cmdVerify(Report& rep, const Options& opt, const std::string& suite) {
    std::vector<SuiteResult> rs;
    if (suite == "all")
        rs = runAllSuites(opt.seed);
    else
        rs.push_back(runSuite(suite, opt.seed));
    bool allPass = true;
    Json list = Json::array();
    for (const auto& r : rs) {
        allPass = allPass && r.passed;
        list.push_back(Json{{"name", r.name},
                            {"passed", r.passed},
                            {"notes", r.notes},
                            {"failures", r.failures}});
    }
    rep.results["suites"] = std::move(list);
    rep.results["passed"] = allPass;
    return allPass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive Grothendieck topologies on finite-dimensional linear categories"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--max-dim", opt.maxDim, "value-dimension cap for enumerations");
    app.add_option("--max-sieves", opt.maxSieves, "candidate cap for lattice enumeration");
    app.add_option("--depth", opt.depth, "override pretopology search depth");

    std::string catPath, ptPath, tPath, fPath, suite = "all";
    unsigned phN = 1;
    int phD = 0, phWindow = 4;

    auto* validate = app.add_subcommand("validate", "validate a category file");
    validate->add_option("cat", catPath)->required();

    auto* top = app.add_subcommand("top", "generated topology of a pretopology");
    top->add_option("--pretopology", ptPath)->required();
    top->add_option("cat", catPath)->required();

    auto* sheafify = app.add_subcommand("sheafify", "sheafify a presheaf");
    sheafify->add_option("--topology", tPath)->required();
    sheafify->add_option("--presheaf", fPath)->required();
    sheafify->add_option("cat", catPath)->required();

    auto* checkSheaf = app.add_subcommand("check-sheaf", "sheaf / separated predicates");
    checkSheaf->add_option("--topology", tPath)->required();
    checkSheaf->add_option("--presheaf", fPath)->required();
    checkSheaf->add_option("cat", catPath)->required();

    auto* enumerate = app.add_subcommand("enumerate-topologies", "enumerate the topology lattice");
    enumerate->add_option("cat", catPath)->required();

    auto* props = app.add_subcommand("props", "subcanonical / bounded / monoidal report");
    props->add_option("--topology", tPath)->required();
    props->add_option("cat", catPath)->required();

    auto* projhom = app.add_subcommand("proj-hom", "twisted global sections on the graded window");
    projhom->add_option("--n", phN)->required();
    projhom->add_option("--d", phD)->required();
    projhom->add_option("--window", phWindow);

    auto* verify = app.add_subcommand("verify", "run bundled verification suites");
    verify->add_option("--suite", suite, "suite name or 'all'");

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    Report rep;
    try {
        int code = 0;
        if (validate->parsed()) code = cmdValidate(rep, catPath);
        else if (top->parsed()) code = cmdTop(rep, opt, ptPath, catPath);
        else if (sheafify->parsed()) code = cmdSheafify(rep, tPath, fPath, catPath);
        else if (checkSheaf->parsed()) code = cmdCheckSheaf(rep, tPath, fPath, catPath);
        else if (enumerate->parsed()) code = cmdEnumerate(rep, opt, catPath);
        else if (props->parsed()) code = cmdProps(rep, opt, tPath, catPath);
        else if (projhom->parsed()) code = cmdProjHom(rep, phN, phD, phWindow);
        else if (verify->parsed()) code = cmdVerify(rep, opt, suite);
        return emit(command, rep, code);
    } catch (const TooLarge& e) {
        rep.results["error"] = e.what();
        return emit(command, rep, 3);
    } catch (const WindowOverflow& e) {
        rep.results["error"] = e.what();
        return emit(command, rep, 3);
    } catch (const Error& e) {
        rep.results["error"] = e.what();
        return emit(command, rep, 2);
    } catch (const Json::exception& e) {
        rep.results["error"] = e.what();
        return emit(command, rep, 2);
    }
}
