#include "tring/hypo.hpp"

namespace tr {

Verdict ConditionT::verdict() const {
  switch (status) {
    case Status::Holds: return Verdict::True;
    case Status::Fails: return Verdict::False;
    case Status::UnknownUpTo: return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

std::string ConditionT::str() const {
  switch (status) {
    case Status::Holds: return "Holds(" + reason + ")";
    case Status::Fails:
      return "Fails(i=" + std::to_string(witness->power) + ", P=" + std::to_string(witness->vertex + 1) +
             ", degree=" + std::to_string(witness->degree) + ", tor=" + std::to_string(witness->torDim) + ")";
    case Status::UnknownUpTo: return "UnknownUpTo(" + std::to_string(bound) + ")";
  }
  return "";
}

ConditionT checkConditionT(const TensorRing& ctx, std::size_t k) {
  ConditionT out;
  out.bound = k;
  const TensorPowers& tp = ctx.tp;
  FdModule mRight = ctx.m().asRightModule(ctx.rOp());
  if (isProjective(mRight)) {
    out.status = ConditionT::Status::Holds;
    out.reason = "M right-projective";
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<FdModule> args;
  bool allProjective = true;
  for (std::size_t i = 1; i <= tp.nilIndex; ++i) {
    for (std::size_t s = 0; s < ctx.r()->idempotentCount(); ++s) {
      FdModule x = tensorOverAlgebra(tp.powers[i], FdModule::projective(ctx.r(), s)).module;
      allProjective = allProjective && isProjective(x);
      index.emplace_back(i, s);
      args.push_back(std::move(x));
    }
  }
  if (allProjective) {
    out.status = ConditionT::Status::Holds;
    out.reason = "arguments projective";
    return out;
  }

  bool allComplete = true;
  for (std::size_t a = 0; a < args.size(); ++a) {
    Resolution res = minimalResolution(args[a], k + 1);
    allComplete = allComplete && res.complete;
    const std::size_t top = res.complete ? res.length() : k;
    for (std::size_t n = 1; n <= top; ++n) {
      auto d = torDimFrom(res, mRight, n);
      if (d && *d != 0) {
        out.status = ConditionT::Status::Fails;
        out.witness = TorWitness{index[a].first, index[a].second, n, *d};
        out.reason = "nonzero Tor";
        return out;
      }
    }
  }
  if (allComplete) {
    out.status = ConditionT::Status::Holds;
    out.reason = "Tor vanishes; all resolutions finite";
  } else {
    out.status = ConditionT::Status::UnknownUpTo;
  }
  return out;
}

const char* variantName(Variant v) {
  switch (v) {
    case Variant::GP: return "gp";
    case Variant::GI: return "gi";
    case Variant::GF: return "gf";
  }
  return "gp";
}

Variant parseVariant(const std::string& s) {
  for (Variant v : {Variant::GP, Variant::GI, Variant::GF}) {
    if (s == variantName(v)) return v;
  }
  throw Error(ErrorKind::InvalidInput, "unknown theorem variant '" + s + "'");
}

namespace {

Verdict finiteVerdict(const DimBound& b) { return b.finite ? Verdict::True : Verdict::Unknown; }

}  // namespace

HypothesisReport hypothesisReport(const TensorRing& ctx, Variant variant, std::size_t k, std::size_t maxLen) {
  HypothesisReport r;
  r.variant = variant;
  r.conditionT = checkConditionT(ctx, k);
  FdModule mLeft = ctx.m().asLeftModule();
  FdModule mRight = ctx.m().asRightModule(ctx.rOp());
  r.pdLeftM = pdBound(mLeft, maxLen);
  r.fdLeftM = r.pdLeftM;
  r.pdRightM = pdBound(mRight, maxLen);
  r.fdRightM = r.pdRightM;
  r.leftFlat = isFlat(mLeft);
  r.notes.push_back("flat dimension equals projective dimension for finitely generated modules");
  switch (variant) {
    case Variant::GP:
      r.applicable = verdictAnd(r.conditionT.verdict(), verdictAnd(finiteVerdict(r.pdLeftM), finiteVerdict(r.fdRightM)));
      break;
    case Variant::GI:
      r.applicable = verdictAnd(r.conditionT.verdict(), verdictAnd(finiteVerdict(r.fdLeftM), finiteVerdict(r.pdRightM)));
      break;
    case Variant::GF:
      r.applicable = verdictAnd(toVerdict(r.leftFlat), finiteVerdict(r.pdRightM));
      r.notes.push_back("right coherence: satisfied: finite-dimensional");
      r.notes.push_back("finite presentation of M: satisfied: finite-dimensional");
      r.notes.push_back("Gorenstein flat is tested as Gorenstein projective for finite-dimensional modules");
      break;
  }
  return r;
}

}  // namespace tr
