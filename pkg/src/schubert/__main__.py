from schubert.cli import main

main()
