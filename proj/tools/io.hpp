#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ospl/characters.hpp"
#include "ospl/linkage.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/spo21.hpp"
#include "ospl/verify.hpp"

namespace ospl::io {

using json = nlohmann::ordered_json;

// FactorMultiset: {"factors": [{"hw": int, "mult": int}, ...]}, descending hw.
json to_json(const FactorMultiset& f);
FactorMultiset factors_from_json(const json& j);

// LaurentPoly1: {"terms": [{"weight": int, "coeff": int}, ...]}, descending weight.
json to_json(const LaurentPoly1& ch);
LaurentPoly1 poly1_from_json(const json& j);

// LaurentPolyN: {"terms": [{"weight": [int...], "coeff": int}, ...]}, descending weight.
json to_json(const LaurentPolyN& ch);
LaurentPolyN polyN_from_json(const json& j);

// Weights: lists of numbers in delta-then-eps order; halves print as x.5.
json to_json(const WeightVec& w);
WeightVec weight_from_json(const json& j);

// Flag: ["1", "-2", "1bar"].
json to_json(const Flag& f);
Flag flag_from_json(const json& j);

json to_json(const Root& r);
json to_json(const BasisMonomial& m, i64 degree, bool frobenius);
json to_json(const MorphismTable& t, bool frobenius);
json to_json(const Chain& c);
json to_json(const LinkageGraph& g);
json to_json(const CriterionResult& r);

// Tab-separated table with a header row.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write_tsv(std::ostream& os) const;
    void write_text(std::ostream& os) const;
};

Table factor_table(const FactorMultiset& f);
Table poly_table(const LaurentPolyN& ch);

}  // namespace ospl::io
