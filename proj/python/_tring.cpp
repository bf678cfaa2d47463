#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tring/constructs.hpp"
#include "tring/verhar.hpp"

namespace py = pybind11;
using namespace tr;

namespace {

struct PyInstance {
  AlgebraPtr r;
  Bimodule m;
};

struct PyRing {
  TensorRing ctx;
  std::size_t maxLen;
};

CampaignConfig config(std::size_t samples, std::uint64_t seed, std::size_t maxGen, std::size_t maxLen) {
  CampaignConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.maxGenerators = maxGen;
  cfg.maxLen = maxLen;
  return cfg;
}

std::string classify(const PyRing& ring, const std::string& object, const std::string& cls, const std::string& method) {
  const TensorRing& ctx = ring.ctx;
  Json doc = Json::parse(object);
  ClassTag tag = parseClassTag(cls);
  Method how = parseMethod(method);
  Certificates certs = computeCertificates(ctx, ring.maxLen);
  const bool copair = doc.is_object() && doc.contains("Y");
  ClassifyResult res = copair ? classifyCopairOverT(ctx, copairFromJson(doc, ctx), tag, how, certs)
                              : classifyOverT(ctx, pairFromJson(doc, ctx), tag, how, certs);
  Json j{{"kind", copair ? "copair" : "pair"},
         {"class", classTagName(tag)},
         {"method", methodName(how)},
         {"structural", verdictName(res.structural)},
         {"direct", verdictName(res.direct)},
         {"verdict", verdictName(res.combined)},
         {"counterexample", res.counterexample},
         {copair ? "vEpi" : "uMono", res.uMono}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_tring, mod) {
  mod.doc() = "Tensor rings of nilpotent bimodules over finite-dimensional algebras";
  mod.attr("__version__") = kLibraryVersion;
  py::register_exception<Error>(mod, "TringError", PyExc_ValueError);

  py::class_<PyInstance>(mod, "Instance")
      .def_property_readonly("dim_r", [](const PyInstance& i) { return i.r->dim(); })
      .def_property_readonly("dim_m", [](const PyInstance& i) { return i.m.dim(); })
      .def_property_readonly("field", [](const PyInstance& i) { return i.r->field().p(); })
      .def("algebra_json", [](const PyInstance& i) { return algebraToJson(*i.r).dump(); })
      .def("bimodule_json", [](const PyInstance& i) { return bimoduleToJson(i.m).dump(); })
      .def("write", [](const PyInstance& i, const std::string& dir) { writeInstance(dir, *i.r, i.m); }, py::arg("dir"));

  mod.def(
      "example_qnak",
      [](std::uint32_t p, std::size_t n, std::size_t h, std::size_t i, std::size_t j, bool reversed) {
        AlgebraBimodule ex = exampleQNak(Field(p), n, h, i, j, reversed);
        return PyInstance{ex.r, ex.m};
      },
      py::arg("field") = 2, py::arg("n") = 3, py::arg("h") = 2, py::arg("i") = 1, py::arg("j") = 3,
      py::arg("reversed") = false);
  mod.def(
      "load_manifest",
      [](const std::string& path) {
        Instance in = loadManifest(path);
        return PyInstance{in.r, in.m};
      },
      py::arg("path"));
  mod.def(
      "load_instance",
      [](const std::string& alg, const std::string& bim) {
        Instance in = loadInstance(alg, bim);
        return PyInstance{in.r, in.m};
      },
      py::arg("algebra"), py::arg("bimodule"));

  py::class_<PyRing>(mod, "TensorRing")
      .def(py::init([](const PyInstance& in, std::size_t cap, std::size_t maxLen) {
             return PyRing{TensorRing::build(in.r, in.m, cap), maxLen};
           }),
           py::arg("instance"), py::arg("cap") = 16, py::arg("max_len") = 32)
      .def_property_readonly("nil_index", [](const PyRing& r) { return r.ctx.nilIndex(); })
      .def_property_readonly("dim_t", [](const PyRing& r) { return r.ctx.t->dim(); })
      .def_property_readonly("power_dims",
                             [](const PyRing& r) {
                               std::vector<std::size_t> d;
                               for (const Bimodule& b : r.ctx.tp.powers) d.push_back(b.dim());
                               return d;
                             })
      .def("algebra_json", [](const PyRing& r) { return algebraToJson(*r.ctx.t).dump(); })
      .def(
          "hypotheses",
          [](const PyRing& r, const std::string& variant, std::size_t k) {
            return hypothesisToJson(hypothesisReport(r.ctx, parseVariant(variant), k, r.maxLen)).dump();
          },
          py::arg("variant") = "gp", py::arg("k") = 16)
      .def(
          "verify",
          [](const PyRing& r, const std::string& variant, std::size_t samples, std::uint64_t seed, std::size_t maxGen) {
            VerdictReport rep = verifyTheorem(r.ctx, parseVariant(variant), config(samples, seed, maxGen, r.maxLen));
            return py::make_tuple(rep.toJson().dump(), rep.exitCode());
          },
          py::arg("variant") = "gp", py::arg("samples") = 100, py::arg("seed") = 0, py::arg("max_gen") = 3)
      .def(
          "lemmas",
          [](const PyRing& r, std::size_t samples, std::uint64_t seed, std::size_t maxGen) {
            VerdictReport rep = runLemmaSuite(r.ctx, config(samples, seed, maxGen, r.maxLen));
            return py::make_tuple(rep.toJson().dump(), rep.exitCode());
          },
          py::arg("samples") = 100, py::arg("seed") = 0, py::arg("max_gen") = 3)
      .def("classify", &classify, py::arg("object"), py::arg("cls") = "gp", py::arg("method") = "both")
      .def(
          "random_pair",
          [](const PyRing& r, std::uint64_t seed, std::size_t maxGen) {
            Rng rng(seed);
            return pairToJson(randomPair(r.ctx, config(1, seed, maxGen, r.maxLen), rng)).dump();
          },
          py::arg("seed") = 0, py::arg("max_gen") = 3)
      .def(
          "random_copair",
          [](const PyRing& r, std::uint64_t seed, std::size_t maxGen) {
            Rng rng(seed);
            return copairToJson(randomCopair(r.ctx, config(1, seed, maxGen, r.maxLen), rng)).dump();
          },
          py::arg("seed") = 0, py::arg("max_gen") = 3);
}
