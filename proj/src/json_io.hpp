// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_JSON_IO_HPP
#define PARIKH_JSON_IO_HPP

#include <variant>

#include "flatten.hpp"

namespace parikh {

using Model = std::variant<Pa, Ca, DetApa, BslLanguage, Cqdd>;

enum class ModelKind { Pa, Ca, EpsCa, DetApa, Bsl, Cqdd };

ModelKind model_kind(const Model& m);
const char* model_kind_name(ModelKind k);

// Parse a model from its JSON text. The "type" field ("pa", "ca", "epsca",
// "detapa", "bsl", "cqdd") is honored when present and sniffed from the
// fields otherwise. Throws ParseError on malformed input.
Model load_model(const std::string& text);
Model load_model_file(const std::string& path);

std::string save_model(const Model& m);
void save_model_file(const Model& m, const std::string& path);

// The ordered alphabet a model's words range over.
std::vector<char> model_alphabet(const Model& m);

// Exact membership decision for any model kind.
bool model_accepts(const Model& m, std::string_view w, const Caps& caps = default_caps());

}  // namespace parikh

#endif
