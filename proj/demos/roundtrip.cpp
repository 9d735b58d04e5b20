// Minimal library walkthrough: build params, seal a message into an
// envelope, serialize it, and open it again.

#include <iostream>
#include <random>
#include <string>

#include "thc/keyfile.hpp"
#include "thc/protocol.hpp"

int main() {
    using namespace thc;

    std::mt19937_64 rng(2024);
    Matrix key(4, 4, 257);
    do {
        for (std::size_t i = 1; i <= 4; ++i)
            for (std::size_t j = 1; j <= 4; ++j)
                key.set(i, j, uniform_below(rng, 257));
    } while (!is_valid_key(key));
    const CipherParams params(257, 4, key);

    const std::string text = "attack at dawn";
    const std::vector<std::uint8_t> message(text.begin(), text.end());

    const Envelope env = seal(params, message, rng);
    const auto wire = encode_envelope(env);
    std::cout << "message: " << text.size() << " bytes -> envelope: "
              << wire.size() << " bytes (" << env.ciphertext.blocks.size()
              << " blocks, b=" << env.b << ", r=" << env.r << ")\n";

    const auto recovered = open(params, decode_envelope(wire));
    std::cout << "opened:  " << std::string(recovered.begin(), recovered.end())
              << '\n';
    return recovered == message ? 0 : 1;
}
