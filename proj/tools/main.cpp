#include <iostream>

int main() {
    std::cout << "desim cli placeholder\n";
    return 0;
}
