#ifndef CLIFFVERIFY_SHA256_HPP
#define CLIFFVERIFY_SHA256_HPP

/*
 * Thin wrapper over OpenSSL's one-shot SHA-256, rendering lowercase hex.
 * Used to freeze large canonical serializations (the degree-8 invariants)
 * and to fingerprint the orientation/sign conventions.
 */

#include <openssl/evp.h>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffverify {

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1)
    throw std::runtime_error("sha256_hex: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_SHA256_HPP
