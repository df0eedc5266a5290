int aifnav_placeholder_test_roomworld;
