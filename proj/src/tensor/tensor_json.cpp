#include "omegaforge/tensor/tensor_json.hpp"

#include "omegaforge/exact/serialize.hpp"

namespace omegaforge {

namespace {

using nlohmann::json;

template <class C, class Encode>
json encode(const BasicTensor<C>& t, Encode enc) {
  json j;
  j["dims"] = t.dims();
  if (t.labels()) j["labels"] = *t.labels();
  json entries = json::array();
  for (const auto& [idx, v] : t.entries()) entries.push_back({idx[0], idx[1], idx[2], enc(v)});
  j["entries"] = std::move(entries);
  return j;
}

template <class C, class Decode>
BasicTensor<C> decode(const json& j, Decode dec) {
  try {
    auto dims = j.at("dims").get<Index3>();
    BasicTensor<C> t(dims);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4) throw Error(ErrorKind::ParseError, "tensor entry must be [i,j,k,value]");
      t.set({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}, dec(e[3]));
    }
    if (j.contains("labels")) t.set_labels(j.at("labels").get<Labels>());
    return t;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("tensor JSON: ") + ex.what());
  }
}

}  // namespace

json tensor_to_json(const Tensor& t) {
  return encode(t, [](const FieldElem& v) { return json(to_string(v)); });
}

Tensor tensor_from_json(const json& j) {
  return decode<FieldElem>(j, [](const json& v) { return field_from_json(v); });
}

json curve_to_json(const CurveTensor& t) { return encode(t, laurent_to_json); }

CurveTensor curve_from_json(const json& j) { return decode<LaurentPoly>(j, laurent_from_json); }

json matrix_to_json(const Matrix<FieldElem>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

Matrix<FieldElem> matrix_from_json(const json& j) {
  Matrix<FieldElem> m;
  for (const auto& row : j) {
    std::vector<FieldElem> r;
    for (const auto& v : row) r.push_back(field_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace omegaforge
