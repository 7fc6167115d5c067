#ifndef GOSPACE_SPACE_IO_HPP
#define GOSPACE_SPACE_IO_HPP

#include "gospace/reductive_space.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>

namespace gospace {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input document.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scalar from a JSON string (grammar text) or integer.
Scalar scalar_from_json(const Json &j);
Json to_json(const Scalar &s);
Json to_json(const Vector &v);
Json to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// Parses a space document. Unknown keys are rejected. Does not validate the
/// mathematical identities.
ReductiveSpace space_from_json(const Json &doc);
Json to_json(const ReductiveSpace &space);

Json read_json_file(const std::filesystem::path &path);
ReductiveSpace load_space(const std::filesystem::path &path);

Json to_json(const ValidationReport &report);

}  // namespace gospace

#endif
