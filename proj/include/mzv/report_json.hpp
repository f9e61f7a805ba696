#pragma once

#include <vector>

#include <json.hpp>

#include "mzv/combination.hpp"
#include "mzv/fmzv_verify.hpp"
#include "mzv/identity_checker.hpp"
#include "mzv/smzv.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

// {"text": "...", "terms": [{"index": "1,2", "coefficient": "1/2"}, ...]}
Json to_json(const IndexCombination& c);

// {lemma, params, pass, residual}
Json to_json(const LemmaCheckResult& result);

// {identity, params:{...}, primes:{lo,hi}, results:[{p,residue,pass}],
//  summary:{all_pass, first_failure, enforced_above}}
Json to_json(const PrimeSweepReport& report);

// {identity:"smzv-wsf", params:{k,r,i,star,M}, S, basis, q, residual, pass, label}
Json to_json(const SmzvReport& report);

}  // namespace mzv
