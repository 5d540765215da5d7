#include "wvkit/checkpoint.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "wvkit/error.hpp"

namespace wvkit {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "wvkit-cnn";
constexpr int kVersion = 1;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json tensor_to_json(const Tensor& t) {
  return {{"shape", t.shape()},
          {"values", std::vector<double>(t.values().begin(), t.values().end())}};
}

Tensor tensor_from_json(const json& j) {
  return Tensor(j.at("shape").get<std::vector<std::size_t>>(),
                j.at("values").get<std::vector<double>>());
}

json layer_to_json(const Layer& layer) {
  return std::visit(
      Overloaded{
          [](const EmbeddingLayer& e) -> json {
            return {{"type", "embedding"}, {"vocab_size", e.vocab_size},
                    {"dim", e.dim},        {"frozen", e.frozen},
                    {"weights", tensor_to_json(e.weights)}};
          },
          [](const Conv1DLayer& c) -> json {
            return {{"type", "conv1d"},
                    {"kernel", c.kernel},
                    {"in_channels", c.in_channels},
                    {"out_channels", c.out_channels},
                    {"weights", tensor_to_json(c.weights)},
                    {"bias", tensor_to_json(c.bias)}};
          },
          [](const DropoutLayer& d) -> json {
            return {{"type", "dropout"}, {"rate", d.rate}};
          },
          [](const MaxPool1DLayer& p) -> json {
            return {{"type", "maxpool1d"}, {"width", p.width}};
          },
          [](const FlattenLayer&) -> json { return {{"type", "flatten"}}; },
          [](const DenseLayer& d) -> json {
            return {{"type", "dense"},
                    {"in", d.in},
                    {"out", d.out},
                    {"weights", tensor_to_json(d.weights)},
                    {"bias", tensor_to_json(d.bias)}};
          },
          [](const SoftmaxOutputLayer& s) -> json {
            return {{"type", "softmax_output"}, {"classes", s.classes}};
          },
      },
      layer);
}

Layer layer_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "embedding") {
    return EmbeddingLayer{j.at("vocab_size").get<std::size_t>(),
                          j.at("dim").get<std::size_t>(),
                          j.at("frozen").get<bool>(),
                          tensor_from_json(j.at("weights"))};
  }
  if (type == "conv1d") {
    return Conv1DLayer{j.at("kernel").get<std::size_t>(),
                       j.at("in_channels").get<std::size_t>(),
                       j.at("out_channels").get<std::size_t>(),
                       tensor_from_json(j.at("weights")),
                       tensor_from_json(j.at("bias"))};
  }
  if (type == "dropout") return DropoutLayer{j.at("rate").get<double>()};
  if (type == "maxpool1d") return MaxPool1DLayer{j.at("width").get<std::size_t>()};
  if (type == "flatten") return FlattenLayer{};
  if (type == "dense") {
    return DenseLayer{j.at("in").get<std::size_t>(), j.at("out").get<std::size_t>(),
                      tensor_from_json(j.at("weights")),
                      tensor_from_json(j.at("bias"))};
  }
  if (type == "softmax_output") {
    return SoftmaxOutputLayer{j.at("classes").get<std::size_t>()};
  }
  throw IoError(fmt::format("unknown layer type '{}'", type));
}

}  // namespace

void write_checkpoint(std::ostream& out, const Checkpoint& checkpoint) {
  json layers = json::array();
  for (const auto& layer : checkpoint.model.layers()) {
    layers.push_back(layer_to_json(layer));
  }
  const json doc = {{"format", kFormat},
                    {"version", kVersion},
                    {"sequence_length", checkpoint.model.sequence_length()},
                    {"seed", checkpoint.model.seed()},
                    {"words", checkpoint.words},
                    {"layers", std::move(layers)}};
  out << doc.dump() << '\n';
}

void write_checkpoint(const std::filesystem::path& path,
                      const Checkpoint& checkpoint) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  write_checkpoint(out, checkpoint);
  if (!out) throw IoError(fmt::format("write error on '{}'", path.string()));
}

Checkpoint read_checkpoint(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(fmt::format("checkpoint is not valid JSON: {}", e.what()));
  }
  std::vector<Layer> layers;
  std::size_t sequence_length = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> words;
  try {
    if (doc.at("format").get<std::string>() != kFormat ||
        doc.at("version").get<int>() != kVersion) {
      throw IoError("unsupported checkpoint format or version");
    }
    sequence_length = doc.at("sequence_length").get<std::size_t>();
    seed = doc.at("seed").get<std::uint64_t>();
    words = doc.at("words").get<std::vector<std::string>>();
    for (const auto& j : doc.at("layers")) layers.push_back(layer_from_json(j));
  } catch (const json::exception& e) {
    throw IoError(fmt::format("malformed checkpoint: {}", e.what()));
  }
  Checkpoint checkpoint{CnnModel(std::move(layers), sequence_length, seed),
                        std::move(words)};
  if (checkpoint.words.size() != checkpoint.model.vocab_size()) {
    throw DomainError(fmt::format("checkpoint lists {} words for V = {}",
                                  checkpoint.words.size(),
                                  checkpoint.model.vocab_size()));
  }
  return checkpoint;
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read '{}'", path.string()));
  return read_checkpoint(in);
}

}  // namespace wvkit
