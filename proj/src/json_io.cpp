#include "demorgan/json_io.hpp"

#include <initializer_list>
#include <set>

namespace demorgan {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  std::set<std::string> allowed;
  for (auto k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw InputError(std::string(what) + ": missing key \"" + k + "\"");
  }
  for (auto k : optional) allowed.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw InputError(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) out.push_back(integer(v, where));
  return out;
}

std::vector<std::vector<std::int64_t>> integer_matrix(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of rows");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : j) out.push_back(integer_array(row, where));
  return out;
}

std::vector<std::string> string_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(where + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

AlgebraTables algebra_tables_from_json(const Json& j) {
  check_keys(j, {"size", "bottom", "top", "join", "meet", "neg"}, {"labels"}, "algebra");
  AlgebraTables t;
  t.size = integer(j["size"], "size");
  t.bottom = integer(j["bottom"], "bottom");
  t.top = integer(j["top"], "top");
  t.join = integer_matrix(j["join"], "join");
  t.meet = integer_matrix(j["meet"], "meet");
  t.neg = integer_array(j["neg"], "neg");
  if (j.contains("labels")) t.labels = string_array(j["labels"], "labels");
  return t;
}

DeMorganAlgebra algebra_from_json(const Json& j) { return make_algebra(algebra_tables_from_json(j)); }

DualSpaceTables dual_space_tables_from_json(const Json& j) {
  check_keys(j, {"size", "leq", "f"}, {"labels"}, "dual space");
  DualSpaceTables t;
  t.size = integer(j["size"], "size");
  t.leq = integer_matrix(j["leq"], "leq");
  t.f = integer_array(j["f"], "f");
  if (j.contains("labels")) t.labels = string_array(j["labels"], "labels");
  return t;
}

DualSpace dual_space_from_json(const Json& j) {
  return make_dual_space(dual_space_tables_from_json(j));
}

Congruence congruence_from_json(const Json& j) {
  check_keys(j, {"algebra_size", "blocks"}, {}, "congruence");
  const auto n = integer(j["algebra_size"], "algebra_size");
  if (n < 0) throw InputError("congruence: negative algebra_size");
  std::vector<std::vector<Index>> blocks;
  for (const auto& row : integer_matrix(j["blocks"], "blocks")) {
    std::vector<Index> block;
    for (auto v : row) {
      if (v < 0) throw InputError("congruence: negative element");
      block.push_back(static_cast<Index>(v));
    }
    blocks.push_back(std::move(block));
  }
  return Congruence::from_blocks(static_cast<std::size_t>(n), blocks);
}

Json to_json(const DeMorganAlgebra& m) {
  const std::size_t n = m.size();
  Json j;
  j["size"] = n;
  j["bottom"] = m.bottom();
  j["top"] = m.top();
  Json join = Json::array(), meet = Json::array();
  for (Index x = 0; x < n; ++x) {
    Json jr = Json::array(), mr = Json::array();
    for (Index y = 0; y < n; ++y) {
      jr.push_back(m.join(x, y));
      mr.push_back(m.meet(x, y));
    }
    join.push_back(std::move(jr));
    meet.push_back(std::move(mr));
  }
  j["join"] = std::move(join);
  j["meet"] = std::move(meet);
  j["neg"] = Json(std::vector<Index>(m.neg_table().begin(), m.neg_table().end()));
  if (!m.labels().empty()) j["labels"] = m.labels();
  return j;
}

Json to_json(const DualSpace& x) {
  Json j;
  j["size"] = x.size();
  Json leq = Json::array();
  for (Index p = 0; p < x.size(); ++p) {
    Json row = Json::array();
    for (Index q = 0; q < x.size(); ++q) row.push_back(x.leq(p, q) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["f"] = x.involution();
  if (!x.labels().empty()) j["labels"] = x.labels();
  return j;
}

Json to_json(const Congruence& c) {
  Json j;
  j["algebra_size"] = c.algebra_size();
  j["blocks"] = c.blocks();
  return j;
}

Json to_json(const CongruenceSet& s) {
  Json j = Json::array();
  for (const auto& c : s) j.push_back(to_json(c));
  return j;
}

Json to_json(const SubalgebraEmbedding& e) {
  Json j;
  j["subset"] = e.subset;
  j["algebra"] = to_json(e.induced);
  return j;
}

Json to_json(const std::vector<AxiomViolation>& violations) {
  Json j = Json::array();
  for (const auto& v : violations) {
    Json item;
    item["axiom"] = v.axiom;
    item["witness"] = v.witness;
    j.push_back(std::move(item));
  }
  return j;
}

Json to_json(const ExtensionReport& r) {
  Json j;
  j["skeleton"] = r.skeleton.subset;
  j["algebra_congruences"] = r.algebra_congruences.size();
  j["skeleton_congruences"] = r.skeleton_congruences.size();
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json item;
    item["skeleton_congruence"] = to_json(f.skeleton_congruence);
    item["size"] = f.extensions.size();
    Json ext = Json::array();
    for (const auto& c : f.extensions) ext.push_back(to_json(c));
    item["extensions"] = std::move(ext);
    fibers.push_back(std::move(item));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

Json to_json(const FactorDecomposition& d) {
  Json j;
  Json counts;
  counts["B2"] = d.counts[0];
  counts["K3"] = d.counts[1];
  counts["M1"] = d.counts[2];
  j["counts"] = std::move(counts);
  j["y"] = d.y;
  Json tags = Json::array();
  for (auto t : d.tags) tags.push_back(to_string(t));
  j["factors"] = std::move(tags);
  j["renamed"] = d.renamed;
  // Element x maps to entry x: its row-major index in the product of factors.
  j["isomorphism"] = d.product_index;
  return j;
}

Json to_json(const IsoWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["mapping"] = w.mapping;
  return j;
}

Json to_json(const BooleanProductReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["subalgebra"] = r.is_subalgebra;
  j["subdirect"] = r.is_subdirect;
  j["equalizers_clopen"] = r.equalizers_clopen;
  j["patchwork"] = r.patchwork;
  j["full_product"] = r.full_product;
  if (r.patch_failure) {
    Json f;
    f["K"] = Json::array({r.patch_failure->coordinate});
    f["a"] = r.patch_failure->a;
    f["b"] = r.patch_failure->b;
    f["patched"] = r.patch_failure->patched;
    j["patch_failure"] = std::move(f);
  }
  j["detail"] = r.detail;
  return j;
}

Json to_json(const CorpusEntry& e) {
  Json j;
  j["id"] = e.id;
  j["source"] = to_string(e.source);
  if (e.dual_space) j["dual_space"] = to_json(*e.dual_space);
  j["algebra"] = to_json(e.algebra);
  if (e.seed) j["seed"] = *e.seed;
  if (e.index) j["index"] = *e.index;
  return j;
}

}  // namespace demorgan
