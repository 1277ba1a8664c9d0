from aoglab.cli import main

main()
