#pragma once

#include <json.hpp>

#include "p3d/count.hpp"
#include "p3d/moves.hpp"
#include "p3d/verify.hpp"

namespace p3d {

using Json = nlohmann::json;

constexpr int kSchema = 1;

Json pair_json(const Perm& u, const Word& w);
Json seed_json(const Perm& u, const Word& w);
Json move_json(const MoveInstance& mv);
Json moves_json(const Perm& u, const Word& w);
Json apply_json(const Perm& u, const Word& w, int index);
Json count_json(const Perm& u, const Word& w, const std::string& method, long long q, long long budget);
Json homfly_json(const Perm& u, const Word& w);
Json pc_json(const Perm& u, const Word& w);
Json family_json(const FamilyReport& r);
std::string laurent_az_string(const Laurent& p);

}  // namespace p3d
