// Copyright 2026 The f2q Authors
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

#ifndef F2Q_EMBEDDED_DATA_H
#define F2Q_EMBEDDED_DATA_H

#include <string>
#include <utility>
#include <vector>

namespace f2q {

/// Contents of data/circuits, compiled in: (file name, text).
const std::vector<std::pair<std::string, std::string>>& embedded_files();

}  // namespace f2q

#endif
