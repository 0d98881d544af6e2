/*
   Copyright 2026 The gwvi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWVI_CYCLOTOMIC_DETAIL_HPP
#define GWVI_CYCLOTOMIC_DETAIL_HPP

#include <vector>

namespace gwvi::detail {

struct CyclotomicOrderData {
    int order;
    int degree;                               // phi(order)
    std::vector<long> phi;                    // Phi_order, low to high, monic
    std::vector<std::vector<long>> power_mod; // x^j mod Phi_order for 0 <= j < order
};

/// Cached per order, never evicted; the returned reference stays valid.
const CyclotomicOrderData& order_data(int n);

}  // namespace gwvi::detail

#endif  // GWVI_CYCLOTOMIC_DETAIL_HPP
