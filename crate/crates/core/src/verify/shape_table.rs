// (i, a, modules at positions 5, 4, 3, 2, 1, 0)
// In the (-2, 5) row the wedge degree at position j is 5 - j.
const TABLE_9_5: &[(i64, i64, [&str; 6])] = &[
    (-1, 1, ["∧^0F⊗K^1_4(G*)", "∧^1F⊗K^1_3(G*)", "∧^2F⊗K^1_2(G*)", "∧^3F⊗K^1_1(G*)", "∧^4F⊗K^1_0(G*)", "∧^5F"]),
    (0, 1, ["∧^0F⊗K^1_3(G*)", "∧^1F⊗K^1_2(G*)", "∧^2F⊗K^1_1(G*)", "∧^3F⊗K^1_0(G*)", "∧^4F", "∧^9F⊗L^4_1G"]),
    (1, 1, ["∧^0F⊗K^1_2(G*)", "∧^1F⊗K^1_1(G*)", "∧^2F⊗K^1_0(G*)", "∧^3F", "∧^8F⊗L^4_1G", "∧^9F⊗L^4_2G"]),
    (2, 1, ["∧^0F⊗K^1_1(G*)", "∧^1F⊗K^1_0(G*)", "∧^2F", "∧^7F⊗L^4_1G", "∧^8F⊗L^4_2G", "∧^9F⊗L^4_3G"]),
    (3, 1, ["∧^0F⊗K^1_0(G*)", "∧^1F", "∧^6F⊗L^4_1G", "∧^7F⊗L^4_2G", "∧^8F⊗L^4_3G", "∧^9F⊗L^4_4G"]),
    (4, 1, ["∧^0F", "∧^5F⊗L^4_1G", "∧^6F⊗L^4_2G", "∧^7F⊗L^4_3G", "∧^8F⊗L^4_4G", "∧^9F⊗L^4_5G"]),
    (5, 1, ["∧^4F⊗L^4_1G", "∧^5F⊗L^4_2G", "∧^6F⊗L^4_3G", "∧^7F⊗L^4_4G", "∧^8F⊗L^4_5G", "∧^9F⊗L^4_6G"]),
    (-1, 2, ["∧^0F⊗K^2_4(G*)", "∧^1F⊗K^2_3(G*)", "∧^2F⊗K^2_2(G*)", "∧^3F⊗K^2_1(G*)", "∧^4F⊗K^2_0(G*)", "∧^6F"]),
    (0, 2, ["∧^0F⊗K^2_3(G*)", "∧^1F⊗K^2_2(G*)", "∧^2F⊗K^2_1(G*)", "∧^3F⊗K^2_0(G*)", "∧^5F", "∧^9F⊗L^3_1G"]),
    (1, 2, ["∧^0F⊗K^2_2(G*)", "∧^1F⊗K^2_1(G*)", "∧^2F⊗K^2_0(G*)", "∧^4F", "∧^8F⊗L^3_1G", "∧^9F⊗L^3_2G"]),
    (2, 2, ["∧^0F⊗K^2_1(G*)", "∧^1F⊗K^2_0(G*)", "∧^3F", "∧^7F⊗L^3_1G", "∧^8F⊗L^3_2G", "∧^9F⊗L^3_3G"]),
    (3, 2, ["∧^0F⊗K^2_0(G*)", "∧^2F", "∧^6F⊗L^3_1G", "∧^7F⊗L^3_2G", "∧^8F⊗L^3_3G", "∧^9F⊗L^3_4G"]),
    (4, 2, ["∧^1F", "∧^5F⊗L^3_1G", "∧^6F⊗L^3_2G", "∧^7F⊗L^3_3G", "∧^8F⊗L^3_4G", "∧^9F⊗L^3_5G"]),
    (-1, 3, ["∧^0F⊗K^3_4(G*)", "∧^1F⊗K^3_3(G*)", "∧^2F⊗K^3_2(G*)", "∧^3F⊗K^3_1(G*)", "∧^4F⊗K^3_0(G*)", "∧^7F"]),
    (0, 3, ["∧^0F⊗K^3_3(G*)", "∧^1F⊗K^3_2(G*)", "∧^2F⊗K^3_1(G*)", "∧^3F⊗K^3_0(G*)", "∧^6F", "∧^9F⊗L^2_1G"]),
    (1, 3, ["∧^0F⊗K^3_2(G*)", "∧^1F⊗K^3_1(G*)", "∧^2F⊗K^3_0(G*)", "∧^5F", "∧^8F⊗L^2_1G", "∧^9F⊗L^2_2G"]),
    (2, 3, ["∧^0F⊗K^3_1(G*)", "∧^1F⊗K^3_0(G*)", "∧^4F", "∧^7F⊗L^2_1G", "∧^8F⊗L^2_2G", "∧^9F⊗L^2_3G"]),
    (3, 3, ["∧^0F⊗K^3_0(G*)", "∧^3F", "∧^6F⊗L^2_1G", "∧^7F⊗L^2_2G", "∧^8F⊗L^2_3G", "∧^9F⊗L^2_4G"]),
    (4, 3, ["∧^2F", "∧^5F⊗L^2_1G", "∧^6F⊗L^2_2G", "∧^7F⊗L^2_3G", "∧^8F⊗L^2_4G", "∧^9F⊗L^2_5G"]),
    (-1, 4, ["∧^0F⊗K^4_4(G*)", "∧^1F⊗K^4_3(G*)", "∧^2F⊗K^4_2(G*)", "∧^3F⊗K^4_1(G*)", "∧^4F⊗K^4_0(G*)", "∧^8F"]),
    (0, 4, ["∧^0F⊗K^4_3(G*)", "∧^1F⊗K^4_2(G*)", "∧^2F⊗K^4_1(G*)", "∧^3F⊗K^4_0(G*)", "∧^7F", "∧^9F⊗L^1_1G"]),
    (1, 4, ["∧^0F⊗K^4_2(G*)", "∧^1F⊗K^4_1(G*)", "∧^2F⊗K^4_0(G*)", "∧^6F", "∧^8F⊗L^1_1G", "∧^9F⊗L^1_2G"]),
    (2, 4, ["∧^0F⊗K^4_1(G*)", "∧^1F⊗K^4_0(G*)", "∧^5F", "∧^7F⊗L^1_1G", "∧^8F⊗L^1_2G", "∧^9F⊗L^1_3G"]),
    (3, 4, ["∧^0F⊗K^4_0(G*)", "∧^4F", "∧^6F⊗L^1_1G", "∧^7F⊗L^1_2G", "∧^8F⊗L^1_3G", "∧^9F⊗L^1_4G"]),
    (4, 4, ["∧^3F", "∧^5F⊗L^1_1G", "∧^6F⊗L^1_2G", "∧^7F⊗L^1_3G", "∧^8F⊗L^1_4G", "∧^9F⊗L^1_5G"]),
    (-2, 5, ["∧^0F⊗K^5_5(G*)", "∧^1F⊗K^5_4(G*)", "∧^2F⊗K^5_3(G*)", "∧^3F⊗K^5_2(G*)", "∧^4F⊗K^5_1(G*)", "∧^5F⊗K^5_0(G*)"]),
    (-1, 5, ["∧^0F⊗K^5_4(G*)", "∧^1F⊗K^5_3(G*)", "∧^2F⊗K^5_2(G*)", "∧^3F⊗K^5_1(G*)", "∧^4F⊗K^5_0(G*)", "∧^9F"]),
    (0, 5, ["∧^0F⊗K^5_3(G*)", "∧^1F⊗K^5_2(G*)", "∧^2F⊗K^5_1(G*)", "∧^3F⊗K^5_0(G*)", "∧^8F", "∧^9F⊗L^0_1G"]),
    (1, 5, ["∧^0F⊗K^5_2(G*)", "∧^1F⊗K^5_1(G*)", "∧^2F⊗K^5_0(G*)", "∧^7F", "∧^8F⊗L^0_1G", "∧^9F⊗L^0_2G"]),
    (2, 5, ["∧^0F⊗K^5_1(G*)", "∧^1F⊗K^5_0(G*)", "∧^6F", "∧^7F⊗L^0_1G", "∧^8F⊗L^0_2G", "∧^9F⊗L^0_3G"]),
    (3, 5, ["∧^0F⊗K^5_0(G*)", "∧^5F", "∧^6F⊗L^0_1G", "∧^7F⊗L^0_2G", "∧^8F⊗L^0_3G", "∧^9F⊗L^0_4G"]),
    (4, 5, ["∧^4F", "∧^5F⊗L^0_1G", "∧^6F⊗L^0_2G", "∧^7F⊗L^0_3G", "∧^8F⊗L^0_4G", "∧^9F⊗L^0_5G"]),
];
