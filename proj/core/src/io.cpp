#include "trideform/io.hpp"

#include "trideform/errors.hpp"

#include <fstream>
#include <string>

namespace trideform {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object())
    bad(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end())
    bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad(std::string(what) + " must be a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound)
    bad(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_of_size(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    bad(std::string(what) + " must be an array of length " + std::to_string(n));
  return j;
}

json table_to_json(const std::vector<Rational>& table, std::size_t n) {
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      json cell = json::array();
      for (std::size_t l = 0; l < n; ++l)
        cell.push_back(rational_to_json(table[(i * n + k) * n + l]));
      row.push_back(std::move(cell));
    }
    mul.push_back(std::move(row));
  }
  return mul;
}

std::vector<Rational> table_from_json(const json& j, std::size_t n) {
  std::vector<Rational> table(n * n * n, Rational(0));
  array_of_size(j, n, "mul");
  for (std::size_t i = 0; i < n; ++i) {
    array_of_size(j[i], n, "mul row");
    for (std::size_t k = 0; k < n; ++k) {
      array_of_size(j[i][k], n, "mul cell");
      for (std::size_t l = 0; l < n; ++l)
        table[(i * n + k) * n + l] = rational_from_json(j[i][k][l]);
    }
  }
  return table;
}

std::vector<std::string> names_from_json(const json& j, std::size_t n, const char* fallback_prefix) {
  std::vector<std::string> names;
  if (j.is_object() && j.contains("basis")) {
    const json& b = array_of_size(j["basis"], n, "basis");
    for (const auto& x : b) {
      if (!x.is_string())
        bad("basis names must be strings");
      names.push_back(x.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      names.push_back(fallback_prefix + std::to_string(i));
  }
  return names;
}

BarWord letters_from_json(const json& j, std::size_t dim_a) {
  if (!j.is_array() || j.empty())
    bad("a block must be a non-empty array of letters");
  BarWord w;
  for (const auto& x : j)
    w.push_back(index_from_json(x, dim_a, "letter"));
  return w;
}

} // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
}

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string())
    return Rational::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  bad("rationals must be strings \"p/q\" or integers");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(rational_to_json(x));
  return out;
}

Vector vector_from_json(const json& j, std::size_t expected_size) {
  array_of_size(j, expected_size, "vector");
  Vector v;
  for (const auto& x : j)
    v.push_back(rational_from_json(x));
  return v;
}

json dense_matrix_to_json(const SparseMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(rational_to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

SparseMatrix dense_matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  array_of_size(j, rows, "matrix");
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r], cols);
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, row[c]);
  }
  return m;
}

json triplets_to_json(const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      entries.push_back(json::array({r, c, rational_to_json(v)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json algebra_to_json(const FiniteAlgebra& alg) {
  return {{"dim", alg.dim()}, {"basis", alg.basis_names()}, {"mul", table_to_json(alg.table(), alg.dim())}};
}

FiniteAlgebra algebra_from_json(const json& j) {
  if (j.is_object() && j.contains("unital") && j["unital"] == true)
    bad("unital algebras are not supported");
  const std::size_t n = count_from_json(field(j, "dim"), "dim");
  if (n == 0)
    bad("dim must be positive");
  return {names_from_json(j, n, "e"), table_from_json(field(j, "mul"), n)};
}

json base_to_json(const ArtinLocalAlgebra& base) {
  json j = algebra_to_json(base.as_algebra());
  j["unit_index"] = 0;
  j["nilpotency"] = base.nilpotency();
  return j;
}

ArtinLocalAlgebra base_from_json(const json& j) {
  const std::size_t n = count_from_json(field(j, "dim"), "dim");
  if (n == 0)
    bad("dim must be positive");
  if (j.contains("unit_index") && count_from_json(j["unit_index"], "unit_index") != 0)
    bad("the unit of the base must be basis element 0");
  const std::size_t nil = count_from_json(field(j, "nilpotency"), "nilpotency");
  if (nil == 0)
    bad("nilpotency must be positive");
  return {names_from_json(j, n, "f"), table_from_json(field(j, "mul"), n), nil};
}

json cochain_to_json(const Cochain& c) {
  json values = json::array();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const ExtendedElement& v = c.value(t);
    if (v.is_zero())
      continue;
    json out = json::array();
    for (std::size_t a = 0; a < c.dim_a(); ++a) {
      json row = json::array();
      for (std::size_t p = 0; p < c.dim_b(); ++p)
        row.push_back(rational_to_json(v.at(a, p)));
      out.push_back(std::move(row));
    }
    values.push_back({{"in", c.decode(t)}, {"out", std::move(out)}});
  }
  return {{"arity", c.arity()}, {"values", std::move(values)}};
}

Cochain cochain_from_json(const json& j, std::size_t dim_a, std::size_t dim_b) {
  const std::size_t arity = count_from_json(field(j, "arity"), "arity");
  if (arity == 0)
    bad("arity must be positive");
  Cochain c(arity, dim_a, dim_b);
  const json& values = field(j, "values");
  if (!values.is_array())
    bad("values must be an array");
  std::vector<bool> seen(c.tuple_count(), false);
  for (const auto& entry : values) {
    const json& in = array_of_size(field(entry, "in"), arity, "in");
    std::vector<std::size_t> tuple;
    for (const auto& x : in)
      tuple.push_back(index_from_json(x, dim_a, "input index"));
    const std::size_t t = c.encode(tuple);
    if (seen[t])
      bad("tuple listed twice");
    seen[t] = true;
    const json& out = array_of_size(field(entry, "out"), dim_a, "out");
    for (std::size_t a = 0; a < dim_a; ++a) {
      const Vector row = vector_from_json(out[a], dim_b);
      for (std::size_t p = 0; p < dim_b; ++p)
        c.value(t).at(a, p) = row[p];
    }
  }
  return c;
}

json word_to_json(const CobarWord& w) {
  json out = json::array();
  for (const auto& block : w.blocks)
    out.push_back(block);
  return out;
}

CobarWord word_from_json(const json& j, std::size_t dim_a) {
  if (!j.is_array() || j.empty())
    bad("a word must be a non-empty array of blocks");
  CobarWord w;
  for (const auto& block : j)
    w.blocks.push_back(letters_from_json(block, dim_a));
  return w;
}

json cobar_sum_to_json(const CobarSum& x) {
  json out = json::array();
  for (const auto& [w, c] : x.terms())
    out.push_back({{"word", word_to_json(w)}, {"coeff", vector_to_json(c)}});
  return out;
}

CobarSum cobar_sum_from_json(const json& j, std::size_t dim_a, std::size_t dim_b) {
  if (!j.is_array())
    bad("a formal sum must be an array of terms");
  CobarSum x(dim_b);
  for (const auto& term : j)
    x.add(word_from_json(field(term, "word"), dim_a), vector_from_json(field(term, "coeff"), dim_b));
  return x;
}

json derivation_to_json(const Derivation& d) {
  json values = json::array();
  for (const auto& [g, v] : d.values())
    values.push_back({{"generator", json::array({g})}, {"out", cobar_sum_to_json(v)}});
  return {{"degree", d.degree()}, {"word_bound", d.word_bound()}, {"values", std::move(values)}};
}

Derivation derivation_from_json(const json& j, std::size_t dim_a, std::size_t dim_b, std::size_t min_bound) {
  const json& deg = field(j, "degree");
  if (!deg.is_number_integer())
    bad("degree must be an integer");
  const json& values = field(j, "values");
  if (!values.is_array())
    bad("values must be an array");
  std::size_t bound = min_bound;
  if (j.contains("word_bound"))
    bound = std::max(bound, count_from_json(j["word_bound"], "word_bound"));
  std::vector<std::pair<BarWord, CobarSum>> entries;
  for (const auto& entry : values) {
    const json& g = field(entry, "generator");
    // [[letters]] (one block) or plain [letters]
    const json& block = (g.is_array() && g.size() == 1 && g[0].is_array()) ? g[0] : g;
    BarWord gen = letters_from_json(block, dim_a);
    bound = std::max(bound, gen.size());
    entries.emplace_back(std::move(gen), cobar_sum_from_json(field(entry, "out"), dim_a, dim_b));
  }
  Derivation d(deg.get<int>(), dim_a, dim_b, bound);
  for (const auto& [g, v] : entries) {
    if (!d.on_generator(g).is_zero())
      bad("generator listed twice");
    d.set(g, v);
  }
  return d;
}

json flat_to_json(const FlatDeformation& t) {
  json action = json::array();
  for (const auto& m : t.b_action)
    action.push_back(dense_matrix_to_json(m));
  return {{"carrier_dim", t.carrier_dim},
          {"b_action", std::move(action)},
          {"mul", table_to_json(t.mul, t.carrier_dim)},
          {"reduction", dense_matrix_to_json(t.reduction)}};
}

FlatDeformation flat_from_json(const json& j, std::size_t dim_a, std::size_t dim_b) {
  FlatDeformation t;
  t.carrier_dim = count_from_json(field(j, "carrier_dim"), "carrier_dim");
  if (t.carrier_dim == 0)
    bad("carrier_dim must be positive");
  const json& action = array_of_size(field(j, "b_action"), dim_b, "b_action");
  for (const auto& m : action)
    t.b_action.push_back(dense_matrix_from_json(m, t.carrier_dim, t.carrier_dim));
  t.mul = table_from_json(field(j, "mul"), t.carrier_dim);
  t.reduction = dense_matrix_from_json(field(j, "reduction"), dim_a, t.carrier_dim);
  return t;
}

json complex_to_json(const TruncatedComplex& c) {
  json degrees = json::array();
  for (int deg = c.min_degree(); deg <= 0; ++deg) {
    json words = json::array();
    for (const auto& w : c.basis(deg))
      words.push_back(word_to_json(w));
    json entry = {{"degree", deg}, {"words", std::move(words)}};
    if (deg < 0)
      entry["differential"] = triplets_to_json(c.differential(deg));
    degrees.push_back(std::move(entry));
  }
  return {{"word_bound", c.word_bound()}, {"dim_b", c.dim_b()}, {"degrees", std::move(degrees)}};
}

json h0_to_json(const H0Result& h) {
  json basis = json::array();
  for (const auto& w : h.basis)
    basis.push_back(word_to_json(w));
  return {{"word_bound", h.word_bound},
          {"dimension", h.dimension},
          {"ambient_dimension", h.ambient_dimension},
          {"relation_rank", h.relation_rank},
          {"basis", std::move(basis)},
          {"product", cochain_to_json(h.product)}};
}

json verdict_to_json(Verdict v, const json& witness) { return {{"verdict", to_string(v)}, {"witness", witness}}; }

} // namespace trideform
