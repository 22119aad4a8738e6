#pragma once

#include "qcoh/channels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcoh {

/// The document is malformed: unreadable, invalid JSON, or a schema
/// violation. Distinct from validation_error, which means the data parsed
/// but fails a physical check.
class document_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk channel description. Complex entries are [re, im] pairs; a
/// matrix is an array of rows. "tolerance" optionally overrides the default
/// validation tolerance.
///
///   {
///     "name": "amplitude damping p=0.5",   (optional)
///     "dim": 2,
///     "kraus": [ [ [[1,0],[0,0]], [[0,0],[0.7071,0]] ], ... ],
///     "tolerance": 1e-10                    (optional)
///   }
struct ChannelDocument {
  Eigen::Index dim = 0;
  std::vector<Matrix> kraus;
  std::string name;
  std::optional<double> tolerance;
};

/// Parses a JSON document. Throws document_error on any malformation.
ChannelDocument parse_channel_document(const std::string& json_text);

/// Reads and parses a channel file. Throws document_error if the file is
/// unreadable or malformed.
ChannelDocument load_channel_document(const std::string& path);

/// Validates the document's Kraus set into a channel. Tolerance precedence:
/// explicit override, then the file's declared tolerance, then the default.
KrausChannel channel_from_document(const ChannelDocument& doc,
                                   std::optional<double> tol_override = std::nullopt);

}  // namespace qcoh
