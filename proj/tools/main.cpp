#include <iostream>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cout << "starcore CLI placeholder\n";
    return 0;
}
