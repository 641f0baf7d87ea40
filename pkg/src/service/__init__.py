# Service层初始化文件