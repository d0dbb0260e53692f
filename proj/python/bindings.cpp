#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "nvalued/closed_forms.hpp"
#include "nvalued/coset.hpp"
#include "nvalued/growth.hpp"
#include "nvalued/group.hpp"
#include "nvalued/nbonacci.hpp"
#include "nvalued/symbolic.hpp"
#include "nvalued/zplus.hpp"

namespace py = pybind11;
using namespace nvalued;

namespace {

py::object big_to_py(const BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

std::vector<std::uint64_t> growth_xi(int s, int m, int k, std::uint64_t cap,
                                     int threads) {
  const GroupSpec spec(s, m);
  const CosetGroup group(spec);
  GrowthOptions opts;
  opts.max_elements = cap;
  opts.threads = threads;
  const GrowthResult res = growth_sequence(group, group.generator(), k, opts);
  if (res.truncated) {
    throw std::runtime_error("growth: element cap of " + std::to_string(cap) +
                             " exceeded");
  }
  return res.xi;
}

Morphism morphism_from_dict(const py::dict& images) {
  std::string alphabet;
  std::vector<std::string> image_words;
  for (const auto& item : images) {
    const std::string letter = py::cast<std::string>(item.first);
    if (letter.size() != 1) {
      throw std::invalid_argument("morphism keys must be single letters");
    }
    alphabet += letter;
    image_words.push_back(py::cast<std::string>(item.second));
  }
  return Morphism(std::move(alphabet), std::move(image_words));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "n-valued coset groups: growth enumeration, n-bonacci numerics, and "
      "the cubeless-word tree";

  py::register_exception<PrecisionRangeError>(m, "PrecisionRangeError",
                                              PyExc_ValueError);

  // multivalued products and growth
  m.def(
      "zplus_mul",
      [](std::uint64_t x, std::uint64_t y) {
        return zplus_mul(x, y).elements();
      },
      py::arg("x"), py::arg("y"),
      "Product [|x-y|, x+y] in the 2-valued group on nonnegative integers.");
  m.def("growth", &growth_xi, py::arg("s"), py::arg("m"), py::arg("k"),
        py::arg("cap") = 10'000'000, py::arg("threads") = 1,
        "Growth sequence xi_0..xi_k of the s-valued coset group on s free "
        "factors of order m.");
  m.def(
      "growth_zplus",
      [](std::uint64_t base, int k) {
        return growth_sequence(ZPlusGroup{}, base, k).xi;
      },
      py::arg("base"), py::arg("k"));
  m.def(
      "new_counts",
      [](const std::vector<std::uint64_t>& xi) { return new_counts(xi); },
      py::arg("xi"), "Per-step new-element counts S_k from a xi sequence.");
  m.def("zplus_isomorphism_check", &zplus_isomorphism_check,
        py::arg("max_index"));

  // words in the free product
  m.def(
      "reduce_word",
      [](const std::string& text, int s, int m) {
        return render(parse_word(text, GroupSpec(s, m)));
      },
      py::arg("word"), py::arg("s"), py::arg("m"));
  m.def(
      "canonical_word",
      [](const std::string& text, int s, int m) {
        const GroupSpec spec(s, m);
        return render(canonical(parse_word(text, spec), spec));
      },
      py::arg("word"), py::arg("s"), py::arg("m"));
  m.def(
      "invert_word",
      [](const std::string& text, int s, int m) {
        const GroupSpec spec(s, m);
        return render(invert(parse_word(text, spec), spec));
      },
      py::arg("word"), py::arg("s"), py::arg("m"));
  m.def(
      "apply_phi",
      [](const std::string& text, int shift, int s, int m) {
        const GroupSpec spec(s, m);
        return render(apply_phi(parse_word(text, spec), shift, spec));
      },
      py::arg("word"), py::arg("shift"), py::arg("s"), py::arg("m"));
  m.def(
      "normal_words",
      [](int s, int m, int length, bool first_gen_zero) {
        std::vector<std::string> out;
        for (const NormalWord& w :
             enumerate_normal_words(GroupSpec(s, m), length, first_gen_zero)) {
          out.push_back(render(w));
        }
        return out;
      },
      py::arg("s"), py::arg("m"), py::arg("length"),
      py::arg("first_gen_zero") = true);
  m.def(
      "coset_mul",
      [](const std::string& x, const std::string& y, int s, int m) {
        const CosetGroup group{GroupSpec(s, m)};
        std::vector<std::string> out;
        for (const OrbitClass& c : group.mul(group.element(x), group.element(y))) {
          out.push_back(render(c));
        }
        return out;
      },
      py::arg("x"), py::arg("y"), py::arg("s"), py::arg("m"),
      "Multiset of class products, canonical representatives in sorted "
      "order.");

  // n-bonacci numerics
  m.def(
      "nbonacci", [](int n, int k) { return big_to_py(nbonacci_exact(n, k)); },
      py::arg("n"), py::arg("k"), "Exact n-bonacci term (arbitrary size).");
  m.def("nbonacci_dominant_root", [](int n) { return dominant_root(n); },
        py::arg("n"));
  m.def(
      "nbonacci_roots",
      [](int n) { return all_roots(n).roots; }, py::arg("n"),
      "All characteristic roots, dominant first.");
  m.def("nbonacci_binet", &binet_nbonacci, py::arg("n"), py::arg("k"));
  m.def("nbonacci_rnd", &rnd_formula, py::arg("n"), py::arg("k"),
        "Nearest-integer formula; raises PrecisionRangeError beyond the "
        "certified range.");
  m.def("rnd_precision_limit", &rnd_precision_limit, py::arg("n"));
  m.def(
      "closed_form_xi",
      [](int s, int m, int k) -> py::object {
        const GroupSpec spec(s, m);
        const auto family = family_for(spec);
        if (!family) return py::none();
        const ClosedFormValue value = closed_form_xi(*family, spec, k);
        if (value.exact) return big_to_py(value.integer);
        return py::float_(value.estimate);
      },
      py::arg("s"), py::arg("m"), py::arg("k"),
      "Known closed form for xi_k: exact int, asymptotic float, or None.");
  m.def(
      "s_counts",
      [](int order, int k_max) {
        py::list out;
        for (const BigInt& v : s_counts(order, k_max)) {
          out.append(big_to_py(v));
        }
        return out;
      },
      py::arg("m"), py::arg("k_max"),
      "Predicted per-step new-word counts for two cyclic factors of order "
      "m.");

  // words and the cubeless tree
  m.def(
      "apply_morphism",
      [](const py::dict& images, const std::string& word) {
        return morphism_from_dict(images).apply(word);
      },
      py::arg("images"), py::arg("word"));
  m.def(
      "fixed_point_prefix",
      [](const py::dict& images, const std::string& seed, std::size_t length) {
        if (seed.size() != 1) {
          throw std::invalid_argument("seed must be a single letter");
        }
        return morphism_from_dict(images).fixed_point_prefix(seed[0], length);
      },
      py::arg("images"), py::arg("seed"), py::arg("length"));
  m.def("is_cubeless", &is_cubeless, py::arg("word"), py::arg("order") = 3);
  m.def(
      "tree_levels",
      [](int depth, int order) { return build_tree(depth, order).levels; },
      py::arg("depth"), py::arg("order") = 3);
  m.def(
      "tree_dot",
      [](int depth, const std::vector<std::pair<std::string, std::string>>&
                         highlights) {
        std::vector<HighlightPath> paths;
        for (const auto& [name, word] : highlights) {
          paths.push_back({name, word});
        }
        return export_dot(build_tree(depth), paths);
      },
      py::arg("depth"),
      py::arg("highlights") = std::vector<std::pair<std::string, std::string>>{});
  m.def(
      "tree_json", [](int depth) { return export_json(build_tree(depth)); },
      py::arg("depth"));
  m.def("subtree_level_counts", &subtree_level_counts, py::arg("vertex"),
        py::arg("depth"), py::arg("order") = 3);
  m.def("theta_word", &theta_word, py::arg("psi"), py::arg("k"));
  m.def("q_words", &q_words, py::arg("psi"), py::arg("k"));
  m.def("q_count", &q_count, py::arg("psi"), py::arg("k"));

#ifdef VERSION_INFO
#define NVALUED_STR_IMPL(x) #x
#define NVALUED_STR(x) NVALUED_STR_IMPL(x)
  m.attr("__version__") = NVALUED_STR(VERSION_INFO);
#undef NVALUED_STR
#undef NVALUED_STR_IMPL
#else
  m.attr("__version__") = "0.1.0";
#endif
}
