// Command-line frontend. Exit status: 0 verified, 1 false or counterexample,
// 2 unknown or hypotheses unmet, 3 input error.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tring/constructs.hpp"
#include "tring/verhar.hpp"

namespace {

using namespace tr;
namespace fs = std::filesystem;

constexpr int kExitInput = 3;

struct Globals {
  std::size_t bound = 32;
  std::size_t torBound = 16;
  std::size_t cap = 16;
};

int verdictExit(Verdict v) {
  switch (v) {
    case Verdict::True: return 0;
    case Verdict::False: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

/// One argument: a directory with manifest.json or a manifest file.
/// Two arguments: algebra and bimodule documents.
Instance loadArgs(const std::vector<std::string>& args) {
  if (args.size() == 1) return loadManifest(args[0]);
  if (args.size() == 2) return loadInstance(args[0], args[1]);
  throw Error(ErrorKind::InvalidInput, "expected an instance directory, a manifest, or algebra and bimodule files");
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << dumpJson(j);
  } else {
    writeJsonFile(out, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor rings of nilpotent bimodules: construction, classification and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--bound", g.bound, "Resolution length bound (maxLen)")->capture_default_str();
  app.add_option("--torbound", g.torBound, "Tor degree bound K for condition (T)")->capture_default_str();
  app.add_option("--cap", g.cap, "Nilpotency cap")->capture_default_str();

  std::vector<std::string> inst;
  std::string out;
  int code = 0;

  auto* nil = app.add_subcommand("nilpotency", "Nilpotency index and tensor power dimensions");
  nil->add_option("instance", inst, "Instance directory, manifest, or algebra + bimodule files")->required();

  auto* build = app.add_subcommand("build", "Structure constants of the tensor ring");
  build->add_option("instance", inst)->required();
  build->add_option("-o,--output", out, "Output file");

  auto* hyp = app.add_subcommand("hypotheses", "Hypothesis report for a theorem variant");
  std::string hypVariant = "gp";
  hyp->add_option("instance", inst)->required();
  hyp->add_option("--variant", hypVariant, "gp, gi or gf")->capture_default_str();
  hyp->add_option("-o,--output", out);

  auto* cls = app.add_subcommand("classify", "Classify a pair or copair over the tensor ring");
  std::vector<std::string> clsArgs;
  std::string clsClass = "gp", clsMethod = "both";
  cls->add_option("args", clsArgs, "Instance (directory, or algebra + bimodule) followed by the pair/copair file")
      ->required();
  cls->add_option("--class", clsClass, "proj, inj, flat, gp, gi or gf")->capture_default_str();
  cls->add_option("--method", clsMethod, "phi, direct or both")->capture_default_str();
  cls->add_option("-o,--output", out);

  CampaignConfig cfg;
  auto addCampaign = [&](CLI::App* sc) {
    sc->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
    sc->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sc->add_option("--max-gen", cfg.maxGenerators, "Maximal number of generators of sampled modules")
        ->capture_default_str();
    sc->add_option("-o,--output", out);
  };
  auto* ver = app.add_subcommand("verify", "Randomized verification campaign");
  std::string verVariant;
  ver->add_option("variant", verVariant, "gp, gi or gf")->required();
  ver->add_option("instance", inst)->required();
  addCampaign(ver);

  auto* lem = app.add_subcommand("lemmas", "Lemma property suite");
  lem->add_option("instance", inst)->required();
  addCampaign(lem);

  auto* ex = app.add_subcommand("example", "Named example instances");
  ex->require_subcommand(1);
  auto* qnak = ex->add_subcommand("qnak", "Cyclic Nakayama algebra with a corner bimodule");
  qnak->set_help_flag("--help", "Print this help message and exit");
  std::uint32_t qp = 2;
  std::size_t qn = 3, qh = 2, qi = 1, qj = 3;
  bool qrev = false;
  qnak->add_option("--field", qp, "Field characteristic")->capture_default_str();
  qnak->add_option("--n", qn, "Number of vertices")->capture_default_str();
  qnak->add_option("--h", qh, "Relation length")->capture_default_str();
  qnak->add_option("--i", qi, "First vertex (1-based)")->capture_default_str();
  qnak->add_option("--j", qj, "Second vertex (1-based)")->capture_default_str();
  qnak->add_flag("--reversed", qrev, "Use R e_j (x) e_i R");
  qnak->add_option("-o,--output", out, "Output directory")->required();

  auto* tx = app.add_subcommand("trivext", "Trivial extension of a 1-nilpotent bimodule");
  tx->add_option("instance", inst)->required();
  tx->add_option("-o,--output", out);

  auto* mor = app.add_subcommand("morita", "Morita context ring with zero bimodule maps");
  std::string ma, mb, mu, mv;
  mor->add_option("instance", inst, "Use (R, R, M, M) from this instance");
  mor->add_option("--a", ma, "Algebra A");
  mor->add_option("--b", mb, "Algebra B");
  mor->add_option("--u", mu, "(B,A)-bimodule U");
  mor->add_option("--v", mv, "(A,B)-bimodule V");
  mor->add_option("-o,--output", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*nil) {
      Instance in = loadArgs(inst);
      TensorPowers tp = tensorPowers(in.r, in.m, g.cap);
      Json dims = Json::array();
      for (const Bimodule& b : tp.powers) dims.push_back(b.dim());
      emit(Json{{"nilIndex", tp.nilIndex}, {"powerDims", dims}, {"cap", g.cap}}, out);
    } else if (*build) {
      Instance in = loadArgs(inst);
      TensorRing ctx = TensorRing::build(in.r, in.m, g.cap);
      Json j = algebraToJson(*ctx.t);
      j["degreeOffsets"] = ctx.offsets;
      emit(j, out);
    } else if (*hyp) {
      Instance in = loadArgs(inst);
      TensorRing ctx = TensorRing::build(in.r, in.m, g.cap);
      HypothesisReport h = hypothesisReport(ctx, parseVariant(hypVariant), g.torBound, g.bound);
      Json j = hypothesisToJson(h);
      j["environment"] = environmentJson(ctx);
      emit(j, out);
      code = verdictExit(h.applicable);
    } else if (*cls) {
      if (clsArgs.size() < 2 || clsArgs.size() > 3) {
        throw Error(ErrorKind::InvalidInput, "classify expects an instance and a pair or copair file");
      }
      std::vector<std::string> instArgs(clsArgs.begin(), clsArgs.end() - 1);
      Instance in = loadArgs(instArgs);
      TensorRing ctx = TensorRing::build(in.r, in.m, g.cap);
      const fs::path objPath = clsArgs.back();
      Json doc = readJsonFile(objPath);
      const ClassTag tag = parseClassTag(clsClass);
      const Method method = parseMethod(clsMethod);
      Certificates certs = computeCertificates(ctx, g.bound);
      ClassifyResult res;
      std::string kind;
      try {
        if (doc.is_object() && doc.contains("Y")) {
          kind = "copair";
          res = classifyCopairOverT(ctx, copairFromJson(doc, ctx), tag, method, certs);
        } else {
          kind = "pair";
          res = classifyOverT(ctx, pairFromJson(doc, ctx), tag, method, certs);
        }
      } catch (const Error& e) {
        throw Error(e.kind(), objPath.string() + ": " + e.detail());
      }
      Json j{{"kind", kind},
             {"class", classTagName(tag)},
             {"method", methodName(method)},
             {"structural", verdictName(res.structural)},
             {"direct", verdictName(res.direct)},
             {"verdict", verdictName(res.combined)},
             {"counterexample", res.counterexample},
             {kind == "pair" ? "uMono" : "vEpi", res.uMono},
             {kind == "pair" ? "cokernel" : "kernel", verdictName(res.partVerdict)},
             {"certificates", certificatesToJson(certs)}};
      emit(j, out);
      code = res.counterexample ? 1 : verdictExit(res.combined);
    } else if (*ver) {
      Instance in = loadArgs(inst);
      TensorRing ctx = TensorRing::build(in.r, in.m, g.cap);
      cfg.maxLen = g.bound;
      cfg.k = g.torBound;
      if (cfg.samples == 0) throw Error(ErrorKind::InvalidInput, "--samples must be at least 1");
      VerdictReport rep = verifyTheorem(ctx, parseVariant(verVariant), cfg);
      emit(rep.toJson(), out);
      if (!out.empty()) {
        std::cout << rep.variant << ": " << rep.status << " (" << rep.agreeCount() << " agree, " << rep.disagreeCount()
                  << " disagree, " << rep.unknownCount() << " unknown)\n";
      }
      code = rep.exitCode();
    } else if (*lem) {
      Instance in = loadArgs(inst);
      TensorRing ctx = TensorRing::build(in.r, in.m, g.cap);
      cfg.maxLen = g.bound;
      cfg.k = g.torBound;
      if (cfg.samples == 0) throw Error(ErrorKind::InvalidInput, "--samples must be at least 1");
      VerdictReport rep = runLemmaSuite(ctx, cfg);
      emit(rep.toJson(), out);
      if (!out.empty()) {
        for (const auto& p : rep.properties) {
          std::cout << (p.passed() ? "pass " : "FAIL ") << p.name << " (" << p.checked << " checked)\n";
        }
      }
      code = rep.exitCode();
    } else if (*qnak) {
      if (!isPrime(qp)) throw Error(ErrorKind::InvalidInput, "--field must be a prime");
      AlgebraBimodule e = exampleQNak(Field(qp), qn, qh, qi, qj, qrev);
      writeInstance(out, *e.r, e.m);
      std::cout << "wrote " << (fs::path(out) / "manifest.json").string() << ": dim R = " << e.r->dim()
                << ", dim M = " << e.m.dim() << "\n";
    } else if (*tx) {
      Instance in = loadArgs(inst);
      emit(algebraToJson(*trivialExtension(in.r, in.m)), out);
    } else if (*mor) {
      AlgebraPtr a, b;
      std::optional<Bimodule> u, v;
      if (!inst.empty()) {
        Instance in = loadArgs(inst);
        a = b = in.r;
        u = in.m;
        v = in.m;
      } else {
        if (ma.empty() || mb.empty() || mu.empty() || mv.empty()) {
          throw Error(ErrorKind::InvalidInput, "morita needs an instance or all of --a, --b, --u, --v");
        }
        a = algebraFromJson(readJsonFile(ma));
        b = algebraFromJson(readJsonFile(mb));
        u = bimoduleFromJson(readJsonFile(mu), b, a);
        v = bimoduleFromJson(readJsonFile(mv), a, b);
      }
      MoritaRing mr = moritaContextRing(a, b, *u, *v);
      writeInstance(out, *mr.c, mr.w);
      Json slots = Json::array();
      for (const MatrixSlot& s : mr.slots) slots.push_back(Json{{"row", s.row}, {"col", s.col}, {"index", s.index}});
      Json ring = algebraToJson(*mr.ring.t);
      ring["slots"] = std::move(slots);
      writeJsonFile(fs::path(out) / "ring.json", ring);
      std::cout << "wrote " << (fs::path(out) / "manifest.json").string() << ": dim ring = " << mr.ring.t->dim() << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotNilpotentWithinCap ? 2 : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
