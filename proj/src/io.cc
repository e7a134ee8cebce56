#include "mak/io.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mak/errors.h"

namespace mak {
namespace {

using Json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void Fail(const std::string& path,
                         const std::string& what) const {
    throw InputError(source_ + ": " + (path.empty() ? "<root>" : path) +
                     ": " + what);
  }

  const Json& Field(const Json& object, const std::string& path,
                    const char* key) const {
    auto it = object.find(key);
    if (it == object.end()) Fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  Value Integer(const Json& node, const std::string& path) const {
    if (node.is_number_integer()) {
      if (node.is_number_unsigned() &&
          node.get<std::uint64_t>() >
              static_cast<std::uint64_t>(std::numeric_limits<Value>::max())) {
        Fail(path, "integer out of range");
      }
      return node.get<Value>();
    }
    Fail(path, "expected an integer, got " + std::string(node.type_name()));
  }

  std::string String(const Json& node, const std::string& path) const {
    if (!node.is_string()) {
      Fail(path, "expected a string, got " + std::string(node.type_name()));
    }
    return node.get<std::string>();
  }

  const Json& Array(const Json& node, const std::string& path) const {
    if (!node.is_array()) {
      Fail(path, "expected an array, got " + std::string(node.type_name()));
    }
    return node;
  }

  const Json& Object(const Json& node, const std::string& path) const {
    if (!node.is_object()) {
      Fail(path, "expected an object, got " + std::string(node.type_name()));
    }
    return node;
  }

 private:
  std::string source_;
};

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

Instance ParseInstance(const std::string& text, const std::string& source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line/column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": invalid JSON: " + e.what());
  }

  Reader r(source);
  r.Object(root, "");
  static const char* const kKnown[] = {"items",  "voters", "budget",   "rule",
                                       "lambda", "target", "sc_order", "sp_axis"};
  for (const auto& [key, value] : root.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) r.Fail(key, "unknown field");
  }

  InstanceData data;
  const Json& items = r.Array(r.Field(root, "", "items"), "items");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = Index("items", i);
    const Json& item = r.Object(items[i], path);
    data.item_ids.push_back(r.String(r.Field(item, path, "id"), path + ".id"));
    data.costs.push_back(
        r.Integer(r.Field(item, path, "cost"), path + ".cost"));
  }
  const Json& voters = r.Array(r.Field(root, "", "voters"), "voters");
  for (std::size_t v = 0; v < voters.size(); ++v) {
    const std::string path = Index("voters", v);
    const Json& voter = r.Object(voters[v], path);
    data.voter_ids.push_back(
        r.String(r.Field(voter, path, "id"), path + ".id"));
    const Json& utils =
        r.Array(r.Field(voter, path, "utils"), path + ".utils");
    if (utils.size() != items.size()) {
      r.Fail(path + ".utils", "has " + std::to_string(utils.size()) +
                                  " entries, expected " +
                                  std::to_string(items.size()));
    }
    std::vector<Value>& row = data.utils.emplace_back();
    for (std::size_t p = 0; p < utils.size(); ++p) {
      row.push_back(r.Integer(utils[p], Index(path + ".utils", p)));
    }
  }
  data.budget = r.Integer(r.Field(root, "", "budget"), "budget");
  try {
    data.rule = ParseRule(r.String(r.Field(root, "", "rule"), "rule"));
  } catch (const InputError& e) {
    r.Fail("rule", e.what());
  }
  const Value lambda = r.Integer(r.Field(root, "", "lambda"), "lambda");
  if (lambda < 1 || lambda > std::numeric_limits<int>::max()) {
    r.Fail("lambda", "must be a positive integer");
  }
  data.lambda = static_cast<int>(lambda);
  if (auto it = root.find("target"); it != root.end() && !it->is_null()) {
    data.target = r.Integer(*it, "target");
  }

  auto ordering = [&](const char* key, bool voters_side)
      -> std::optional<std::vector<int>> {
    auto it = root.find(key);
    if (it == root.end() || it->is_null()) return std::nullopt;
    const Json& list = r.Array(*it, key);
    const auto& ids = voters_side ? data.voter_ids : data.item_ids;
    std::vector<int> order;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string id = r.String(list[i], Index(key, i));
      auto pos = std::find(ids.begin(), ids.end(), id);
      if (pos == ids.end()) r.Fail(Index(key, i), "unknown id '" + id + "'");
      order.push_back(static_cast<int>(pos - ids.begin()));
    }
    return order;
  };
  data.sc_order = ordering("sc_order", true);
  data.sp_axis = ordering("sp_axis", false);

  try {
    return Instance(std::move(data));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string SerializeInstance(const Instance& instance) {
  Json root = Json::object();
  Json items = Json::array();
  for (int p = 0; p < instance.num_items(); ++p) {
    items.push_back({{"id", instance.item_id(p)}, {"cost", instance.cost(p)}});
  }
  Json voters = Json::array();
  for (int v = 0; v < instance.num_voters(); ++v) {
    Json utils = Json::array();
    for (Value u : instance.utils_of(v)) utils.push_back(u);
    voters.push_back({{"id", instance.voter_id(v)}, {"utils", utils}});
  }
  root["items"] = std::move(items);
  root["voters"] = std::move(voters);
  root["budget"] = instance.budget();
  root["rule"] = std::string(RuleName(instance.rule()));
  root["lambda"] = instance.lambda();
  if (instance.target()) root["target"] = *instance.target();
  if (instance.sc_order()) {
    Json order = Json::array();
    for (int v : *instance.sc_order()) order.push_back(instance.voter_id(v));
    root["sc_order"] = std::move(order);
  }
  if (instance.sp_axis()) {
    Json axis = Json::array();
    for (int p : *instance.sp_axis()) axis.push_back(instance.item_id(p));
    root["sp_axis"] = std::move(axis);
  }
  return root.dump(2) + "\n";
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str(), path);
}

void WriteInstanceFile(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << SerializeInstance(instance);
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace mak
