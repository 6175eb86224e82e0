#pragma once

#include "mpcross/drawing.hpp"
#include "mpcross/onepage.hpp"

#include <json.hpp>

#include <string>

namespace mpcross {

nlohmann::ordered_json drawing_to_json(const AbstractDrawing& d);
AbstractDrawing drawing_from_json(const nlohmann::json& j);

nlohmann::ordered_json onepage_to_json(const OnePageDrawing& p);
OnePageDrawing onepage_from_json(const nlohmann::json& j);

// Reads and validates a drawing file. Well-formedness violations raise
// Error unless allow_invalid is set.
AbstractDrawing load_drawing(const std::string& path, bool allow_invalid = false);

void save_drawing(const std::string& path, const AbstractDrawing& d);

// Parses a JSON document from a file, with IO errors reported as ParseError.
nlohmann::json load_json(const std::string& path);

// Writes text to path via a temporary file and rename, so readers never see
// a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace mpcross
