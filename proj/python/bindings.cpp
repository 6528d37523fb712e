#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "azposet/az.hpp"
#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/io.hpp"
#include "azposet/properties.hpp"
#include "azposet/sperner.hpp"
#include "azposet/twopart.hpp"
#include "azposet/verify/acceptance.hpp"

namespace py = pybind11;
using namespace azposet;

namespace {

// Created once at import and kept for the interpreter lifetime.
py::exception<Error>* error_type = nullptr;

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

// Elements may be given as ids or labels.
Family to_family(const RankedPoset& P, const py::iterable& items) {
  std::vector<ElementId> ids;
  for (const auto& item : items) {
    if (py::isinstance<py::str>(item)) {
      const auto label = item.cast<std::string>();
      const auto id = P.find_label(label);
      if (!id) throw Error(ErrorCode::InvalidInput, "no element labelled '" + label + "'");
      ids.push_back(*id);
    } else {
      ids.push_back(item.cast<ElementId>());
    }
  }
  Family F(std::move(ids));
  P.require_members(F);
  return F;
}

ProductFamily to_product(const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  return ProductFamily(pairs);
}

py::list product_list(const ProductFamily& F) {
  py::list out;
  for (const auto& [p, q] : F) out.append(py::make_tuple(p, q));
  return out;
}

NormalityMode parse_mode(const std::string& mode) {
  if (mode == "flow") return NormalityMode::Flow;
  if (mode == "enumerate") return NormalityMode::Enumerate;
  throw Error(ErrorCode::InvalidInput, "mode must be 'flow' or 'enumerate'");
}

StrictSpernerMode parse_sperner_mode(const std::string& mode) {
  if (mode == "auto") return StrictSpernerMode::Auto;
  if (mode == "exhaustive") return StrictSpernerMode::Exhaustive;
  if (mode == "oracle") return StrictSpernerMode::Oracle;
  throw Error(ErrorCode::InvalidInput, "mode must be 'auto', 'exhaustive' or 'oracle'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranked posets, structural checks and exact identity sums";

  error_type = new py::exception<Error>(m, "AzposetError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyObject* type = error_type->ptr();
      py::object instance = py::reinterpret_steal<py::object>(PyObject_CallFunction(type, "s", e.what()));
      instance.attr("code") = py::str(std::string(to_string(e.code())));
      PyErr_SetObject(type, instance.ptr());
    }
  });

  py::class_<RankedPoset>(m, "RankedPoset")
      .def_property_readonly("name", &RankedPoset::name)
      .def_property_readonly("size", &RankedPoset::size)
      .def_property_readonly("rank", &RankedPoset::max_rank)
      .def_property_readonly("whitney", &RankedPoset::whitney_numbers)
      .def_property_readonly("is_u_poset", &RankedPoset::is_u_poset)
      .def("element_rank", &RankedPoset::rank, py::arg("x"))
      .def("label", &RankedPoset::label, py::arg("x"))
      .def("find", &RankedPoset::find_label, py::arg("label"))
      .def("level", [](const RankedPoset& P, Rank i) { return std::vector<ElementId>(P.level(i).begin(), P.level(i).end()); })
      .def("lower_covers", [](const RankedPoset& P, ElementId x) {
        return std::vector<ElementId>(P.lower_covers(x).begin(), P.lower_covers(x).end());
      })
      .def("leq", &RankedPoset::leq)
      .def("covers", [](const RankedPoset& P) {
        std::vector<std::pair<ElementId, ElementId>> out;
        for (const auto& c : P.covers()) out.emplace_back(c.lo, c.hi);
        return out;
      })
      .def("to_json", [](const RankedPoset& P) { return to_python(poset_to_json(P)); })
      .def("to_dot", [](const RankedPoset& P) { return poset_to_dot(P); })
      .def("__len__", &RankedPoset::size)
      .def("__repr__", [](const RankedPoset& P) { return "<RankedPoset " + P.name() + ">"; });

  m.def("generate", py::overload_cast<std::string_view>(&generate), py::arg("spec"),
        "Build a poset from a spec string such as 'boolean:4' or 'trunc(subspace:3,2,1,2)'");
  m.def("from_json", [](const std::string& text) { return poset_from_json(nlohmann::json::parse(text)); });
  m.def("adjoin_bounds", &adjoin_bounds);
  m.def("product", &product);

  m.def("check_regular", [](const RankedPoset& P) { return to_python(certificate(P, check_regular(P))); });
  m.def("check_normal", [](const RankedPoset& P, const std::string& mode) {
    return to_python(certificate(P, check_normal(P, parse_mode(mode))));
  }, py::arg("poset"), py::arg("mode") = "flow");
  m.def("check_strictly_normal", [](const RankedPoset& P) { return to_python(certificate(P, check_strictly_normal(P))); });
  m.def("check_level_connected", [](const RankedPoset& P) { return to_python(certificate(P, check_level_connected(P))); });
  m.def("check_strongly_regular", [](const RankedPoset& P) { return to_python(certificate(P, check_strongly_regular(P))); });
  m.def("verify_chain_covering", [](const RankedPoset& P) {
    return verify_chain_covering(P, build_chain_covering(P)).holds;
  });

  m.def("compute_W", [](const RankedPoset& P, const py::iterable& A) { return compute_W_all(P, to_family(P, A)); });
  m.def("az_identity_sum", [](const RankedPoset& P, const py::iterable& A) {
    const auto b = az_identity_sum(P, to_family(P, A));
    py::dict out;
    out["total"] = fraction(b.total);
    out["regular"] = b.regular;
    py::list terms;
    for (const auto& t : b.terms) terms.append(fraction(t.term));
    out["terms"] = terms;
    return out;
  });
  m.def("key_lemma_sum", [](const RankedPoset& P, const py::iterable& A) {
    const auto r = key_lemma_sum(P, to_family(P, A));
    return py::make_tuple(fraction(r.total), fraction(r.bounded_total));
  });
  m.def("antichain_az", [](const RankedPoset& P, const py::iterable& A) {
    const auto r = antichain_az(P, to_family(P, A));
    return py::make_tuple(fraction(r.lym_part), fraction(r.remainder_part));
  });
  m.def("k_sperner_az", [](const RankedPoset& P, const py::iterable& F, unsigned k) {
    return fraction(k_sperner_az(P, to_family(P, F), k).total);
  });
  m.def("beta", [](const RankedPoset& P, Rank k, Rank l) { return fraction(beta(P, k, l)); });
  m.def("second_az_identity", [](const RankedPoset& P, const std::vector<std::pair<ElementId, ElementId>>& pairs) {
    const auto r = second_az_identity(P, SkewPairSystem{pairs});
    py::list betas;
    for (const auto& b : r.betas) betas.append(fraction(b));
    py::dict out;
    out["betas"] = betas;
    out["remainder"] = fraction(r.remainder);
    out["total"] = fraction(r.total);
    return out;
  });

  m.def("is_k_sperner", [](const RankedPoset& P, const py::iterable& F, unsigned k) {
    return is_k_sperner(P, to_family(P, F), k).holds;
  });
  m.def("lym_sum", [](const RankedPoset& P, const py::iterable& F) { return fraction(lym_sum(P, to_family(P, F))); });
  m.def("max_antichain", [](const RankedPoset& P) { return max_antichain(P).antichain.ids(); });
  m.def("check_strict_k_sperner", [](const RankedPoset& P, unsigned k, const std::string& mode) {
    return to_python(certificate(P, check_strict_k_sperner(P, k, parse_sperner_mode(mode))));
  }, py::arg("poset"), py::arg("k") = 1, py::arg("mode") = "auto");
  m.def("maximum_k_sperner_families", [](const RankedPoset& P, unsigned k) {
    std::vector<std::vector<ElementId>> out;
    for (const auto& F : maximum_k_sperner_families(P, k)) out.push_back(F.ids());
    return out;
  }, py::arg("poset"), py::arg("k") = 1);

  m.def("is_two_part_sperner", [](const RankedPoset& P, const RankedPoset& Q,
                                  const std::vector<std::pair<ElementId, ElementId>>& F) {
    return is_two_part_sperner(P, Q, to_product(F)).holds;
  });
  m.def("two_part_az_sum", [](const RankedPoset& P, const RankedPoset& Q,
                              const std::vector<std::pair<ElementId, ElementId>>& A) {
    const ProductFamily F = to_product(A);
    require_members(P, Q, F);
    return fraction(two_part_az_sum(P, Q, F).total);
  });
  m.def("max_two_part_sperner", [](const RankedPoset& P, const RankedPoset& Q, bool all) {
    const auto r = max_two_part_sperner_exact(P, Q, all);
    py::list fams;
    for (const auto& F : r.families) fams.append(product_list(F));
    return py::make_tuple(r.size, fams);
  }, py::arg("p"), py::arg("q"), py::arg("all") = false);
  m.def("well_paired_size", [](const RankedPoset& P, const RankedPoset& Q) {
    return py::int_(py::str(to_string(well_paired_size(P, Q))));
  });
  m.def("best_full_transversal", [](const RankedPoset& P, const RankedPoset& Q) {
    const auto r = best_full_transversal(P, Q);
    return py::make_tuple(r.transversal.pairs, py::int_(py::str(to_string(r.size))));
  });
  m.def("verify_strict_two_part", [](const RankedPoset& P, const RankedPoset& Q, bool require_strictly_normal) {
    const auto r = verify_strict_two_part(P, Q, require_strictly_normal);
    py::dict out;
    out["holds"] = r.holds;
    out["maximum_size"] = r.maximum_size;
    out["maxima"] = r.maxima;
    out["non_homogeneous_maxima"] = r.non_homogeneous_maxima;
    return out;
  }, py::arg("p"), py::arg("q"), py::arg("require_strictly_normal") = true);

  m.def("run_acceptance", [](const std::vector<int>& ids) {
    py::list out;
    for (const auto& r : verify::run_acceptance(ids)) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("ids") = std::vector<int>{});
}
