#include "polyext/monoid_io.hpp"

#include <fstream>
#include <sstream>

namespace polyext {

  namespace {

    std::vector<Element> element_array(nlohmann::json const& j,
                                       char const*           what) {
      if (!j.is_array()) {
        throw Error(std::string(what) + " must be an array");
      }
      std::vector<Element> out;
      for (auto const& v : j) {
        if (!v.is_number_unsigned()) {
          throw Error(std::string(what)
                      + " entries must be non-negative integers");
        }
        out.push_back(v.get<Element>());
      }
      return out;
    }

    nlohmann::json read_file(std::filesystem::path const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot open " + path.string());
      }
      try {
        return nlohmann::json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw Error(path.string() + ": " + e.what());
      }
    }

  }  // namespace

  MonoidSpec parse_monoid_json(nlohmann::json const& doc) {
    if (!doc.is_object()) {
      throw Error("monoid file must contain a JSON object");
    }
    for (char const* key : {"size", "identity", "table"}) {
      if (!doc.contains(key)) {
        throw Error(std::string("monoid file is missing \"") + key + "\"");
      }
    }
    std::string const name = doc.value("name", std::string("unnamed"));
    if (!doc["size"].is_number_unsigned()) {
      throw Error("\"size\" must be a non-negative integer");
    }
    auto const size = doc["size"].get<std::size_t>();
    if (!doc["table"].is_array() || doc["table"].size() != size) {
      throw Error("\"table\" must be an array of " + std::to_string(size)
                  + " rows");
    }
    Table table;
    for (auto const& row : doc["table"]) {
      table.push_back(element_array(row, "table row"));
    }
    if (!doc["identity"].is_number_unsigned()) {
      throw Error("\"identity\" must be a non-negative integer");
    }
    std::vector<std::string> names;
    if (doc.contains("names")) {
      names = doc["names"].get<std::vector<std::string>>();
    }
    MonoidSpec spec{FiniteMonoid(name, std::move(table),
                                 doc["identity"].get<Element>(),
                                 std::move(names)),
                    std::nullopt};
    if (doc.contains("theta")) {
      Theta theta(element_array(doc["theta"], "theta"));
      if (auto v = validate_theta(spec.monoid, theta)) {
        throw InvalidTheta(*v);
      }
      spec.theta = std::move(theta);
    }
    return spec;
  }

  MonoidSpec parse_monoid_json(std::string_view text) {
    try {
      return parse_monoid_json(nlohmann::json::parse(text));
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed monoid JSON: ") + e.what());
    }
  }

  MonoidSpec load_monoid_json(std::filesystem::path const& path) {
    try {
      return parse_monoid_json(read_file(path));
    } catch (nlohmann::json::exception const& e) {
      throw Error(path.string() + ": " + e.what());
    }
  }

  nlohmann::json to_json(FiniteMonoid const& m, std::optional<Theta> const& theta) {
    nlohmann::json doc;
    doc["name"]     = m.name();
    doc["size"]     = m.size();
    doc["identity"] = m.identity();
    doc["table"]    = m.table();
    if (theta) {
      doc["theta"] = theta->map();
    }
    if (!m.names().empty()) {
      doc["names"] = m.names();
    }
    return doc;
  }

  Theta parse_theta_json(nlohmann::json const& doc) {
    if (doc.is_object() && doc.contains("theta")) {
      return Theta(element_array(doc["theta"], "theta"));
    }
    return Theta(element_array(doc, "theta"));
  }

  Theta load_theta_json(std::filesystem::path const& path) {
    return parse_theta_json(read_file(path));
  }

}  // namespace polyext
