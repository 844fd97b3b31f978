// Copyright 2026 The dsx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dsxc checks, formats and compiles .dsx connector descriptions.
//
// Example usage:
//   dsxc check models/ --report json
//   dsxc gen production-machine.dsx --out build/gen --targets edc,idlink-aas
//   dsxc fmt --check 'models/*.dsx'

#include <iostream>

#include "dsx/cli.hpp"

int main(int argc, char** argv) {
  return dsx::cli::Run(argc, argv, std::cout, std::cerr);
}
